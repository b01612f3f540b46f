"""Feedback events the engine emits and the transcript that records them."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class EarconKind(str, Enum):
    TICK = "tick"
    THONK = "thonk"
    DATA_POINT_CUE = "data_point_cue"


@dataclass(frozen=True)
class FeedbackEvent:
    t: int


@dataclass(frozen=True)
class Speech(FeedbackEvent):
    text: str
    interrupts: bool = True


@dataclass(frozen=True)
class Earcon(FeedbackEvent):
    kind: EarconKind


@dataclass(frozen=True)
class CancelAll(FeedbackEvent):
    pass


@dataclass(frozen=True)
class Transcript:
    """Deterministic record of one session's output."""

    events: tuple[FeedbackEvent, ...]
    scenario_name: str
    overlay_name: str
    config_hash: str
