// Speech and earcon playback.
//
// speak messages go through the browser's speech synthesis; interrupting
// speech (and cancel_all) cuts whatever is queued. Earcons are short
// oscillator blips with fixed meanings: tick = focus change, thonk = list
// boundary, a rising chirp = data point under the finger.

import type { EarconKind } from "./protocol.js";

export class FeedbackAudio {
  readonly speechAvailable: boolean;
  private ctx: AudioContext | null = null;
  private muted = false;

  constructor() {
    this.speechAvailable =
      typeof window !== "undefined" && "speechSynthesis" in window;
  }

  setMuted(muted: boolean): void {
    this.muted = muted;
    if (muted) this.cancelSpeech();
  }

  speak(text: string, interrupts: boolean): void {
    if (!this.speechAvailable || this.muted) return;
    if (interrupts) window.speechSynthesis.cancel();
    const utterance = new SpeechSynthesisUtterance(text);
    utterance.rate = 1.1;
    window.speechSynthesis.speak(utterance);
  }

  cancelSpeech(): void {
    if (this.speechAvailable) window.speechSynthesis.cancel();
  }

  private audioCtx(): AudioContext | null {
    if (typeof window === "undefined" || !("AudioContext" in window)) return null;
    if (!this.ctx) this.ctx = new AudioContext();
    return this.ctx;
  }

  earcon(kind: EarconKind): void {
    if (this.muted) return;
    const ctx = this.audioCtx();
    if (!ctx) return;
    const osc = ctx.createOscillator();
    const gain = ctx.createGain();
    osc.connect(gain).connect(ctx.destination);
    const t = ctx.currentTime;
    if (kind === "tick") {
      osc.frequency.value = 1250;
      gain.gain.setValueAtTime(0.12, t);
      gain.gain.exponentialRampToValueAtTime(0.001, t + 0.045);
      osc.start(t);
      osc.stop(t + 0.05);
    } else if (kind === "thonk") {
      osc.frequency.value = 180;
      osc.type = "square";
      gain.gain.setValueAtTime(0.15, t);
      gain.gain.exponentialRampToValueAtTime(0.001, t + 0.14);
      osc.start(t);
      osc.stop(t + 0.15);
    } else {
      osc.frequency.setValueAtTime(700, t);
      osc.frequency.exponentialRampToValueAtTime(1400, t + 0.09);
      gain.gain.setValueAtTime(0.1, t);
      gain.gain.exponentialRampToValueAtTime(0.001, t + 0.1);
      osc.start(t);
      osc.stop(t + 0.1);
    }
  }
}
