// Shared helpers for the simulator tests: fixture documents straight from
// the engine package, and a live server harness for wire tests.

import { execFileSync, spawn, type ChildProcess } from "node:child_process";
import { readFileSync } from "node:fs";
import { createConnection } from "node:net";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { OverlayDocument, ScenarioDocument } from "../src/protocol.js";

export const REPO_ROOT = join(dirname(fileURLToPath(import.meta.url)), "..", "..");

const SCENARIO_FILES: Record<string, string> = {
  MoviesScatter: "movies_scatter.scenario.json",
  BankTransactions: "bank_transactions.scenario.json",
  TutorialPdf: "tutorial_pdf.scenario.json",
};

export function loadScenarioDoc(name: string): ScenarioDocument {
  const path = join(REPO_ROOT, "src", "tapnav", "fixtures", SCENARIO_FILES[name]);
  return JSON.parse(readFileSync(path, "utf-8")) as ScenarioDocument;
}

export function loadOverlayDoc(kind: string): OverlayDocument {
  const out = execFileSync("python3", [
    "-c",
    "import sys; from tapnav import formats; from tapnav.overlay import builtin_overlay; " +
      `sys.stdout.buffer.write(formats.dump_overlay(builtin_overlay("${kind}")))`,
  ], { cwd: REPO_ROOT });
  return JSON.parse(out.toString("utf-8")) as OverlayDocument;
}

export interface LiveServer {
  port: number;
  proc: ChildProcess;
  stop(): Promise<void>;
}

function portOpen(port: number): Promise<boolean> {
  return new Promise((resolve) => {
    const sock = createConnection({ port, host: "127.0.0.1", timeout: 300 });
    sock.once("connect", () => {
      sock.destroy();
      resolve(true);
    });
    sock.once("error", () => resolve(false));
    sock.once("timeout", () => {
      sock.destroy();
      resolve(false);
    });
  });
}

export async function startServer(): Promise<LiveServer> {
  const port = 8800 + Math.floor(Math.random() * 800);
  const proc = spawn(
    "python3",
    ["-m", "tapnav.cli", "serve", "--port", String(port)],
    { cwd: REPO_ROOT, stdio: ["ignore", "pipe", "pipe"] },
  );
  const stderr: string[] = [];
  proc.stderr?.on("data", (chunk) => stderr.push(String(chunk)));
  const deadline = Date.now() + 20_000;
  while (Date.now() < deadline) {
    if (proc.exitCode !== null) {
      throw new Error(`server exited early: ${stderr.join("")}`);
    }
    if (await portOpen(port)) {
      return {
        port,
        proc,
        stop: () =>
          new Promise((resolve) => {
            proc.once("exit", () => resolve());
            proc.kill("SIGTERM");
          }),
      };
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  proc.kill("SIGKILL");
  throw new Error(`server did not come up: ${stderr.join("")}`);
}
