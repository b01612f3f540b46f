"""Touch gesture recognition.

Raw pointer events are segmented into touch groups (first finger down until
all fingers lifted) and classified into the gesture vocabulary: multi-finger
taps, long press with continuous hover, one/two-finger swipes, and the
three-finger double tap. Classification is purely a function of the event
stream and the thresholds, so identical streams always yield identical
gesture lists.

A completed three-finger tap is withheld until the double-tap window has
passed (or a pairing tap arrives) so it can be disambiguated from the
three-finger double tap; this is the only source of recognition latency.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import StreamError
from .geometry import Point


class Phase(str, Enum):
    DOWN = "down"
    MOVE = "move"
    UP = "up"


class SwipeDirection(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class TouchEvent:
    pointer_id: int
    phase: Phase
    pos: Point
    t: int


@dataclass(frozen=True)
class Gesture:
    t: int


@dataclass(frozen=True)
class Tap(Gesture):
    fingers: int
    pos: Point


@dataclass(frozen=True)
class LongPressStart(Gesture):
    fingers: int
    pos: Point


@dataclass(frozen=True)
class Hover(Gesture):
    pos: Point


@dataclass(frozen=True)
class LongPressEnd(Gesture):
    pos: Point


@dataclass(frozen=True)
class Swipe(Gesture):
    fingers: int
    direction: SwipeDirection


@dataclass(frozen=True)
class ThreeFingerDoubleTap(Gesture):
    pass


@dataclass(frozen=True)
class RecognizerConfig:
    tap_max_duration_ms: int = 300
    long_press_min_ms: int = 500
    multi_finger_window_ms: int = 150
    double_tap_window_ms: int = 400
    tap_slop_mm: float = 4.0
    swipe_min_dist_mm: float = 10.0
    swipe_max_duration_ms: int = 350

    def validate(self) -> list[str]:
        problems = []
        for name in (
            "tap_max_duration_ms",
            "long_press_min_ms",
            "multi_finger_window_ms",
            "double_tap_window_ms",
            "tap_slop_mm",
            "swipe_min_dist_mm",
            "swipe_max_duration_ms",
        ):
            if getattr(self, name) <= 0:
                problems.append(f"{name} must be positive")
        if self.tap_max_duration_ms >= self.long_press_min_ms:
            problems.append("tap_max_duration_ms must be below long_press_min_ms")
        return problems


def _centroid(points: list[Point]) -> Point:
    n = len(points)
    return Point(sum(p.x for p in points) / n, sum(p.y for p in points) / n)


@dataclass
class _Track:
    down_pos: Point
    down_t: int
    last_pos: Point
    max_disp: float = 0.0
    up: bool = False
    up_t: int | None = None


@dataclass
class _Group:
    first_down_t: int
    first_event_index: int
    tracks: dict[int, _Track] = field(default_factory=dict)
    order: list[int] = field(default_factory=list)
    downs_within_window: bool = True
    long_press_emitted: bool = False
    # True while no pointer lifted and every displacement stayed under slop;
    # required for the press to qualify as a long press at the threshold.
    still: bool = True
    invalid: bool = False

    def active_positions(self) -> list[Point]:
        return [t.last_pos for t in self.tracks.values() if not t.up]

    def all_positions(self) -> list[Point]:
        return [t.last_pos for t in self.tracks.values()]

    def down_positions(self) -> list[Point]:
        return [self.tracks[pid].down_pos for pid in self.order]

    def all_up(self) -> bool:
        return all(t.up for t in self.tracks.values())

    def last_up_t(self) -> int:
        return max(t.up_t for t in self.tracks.values() if t.up_t is not None)


@dataclass
class _PendingTap3:
    first_down_t: int
    tap: Tap


class IncrementalRecognizer:
    """Feed touch events in order; completed gestures come back as they resolve."""

    def __init__(self, cfg: RecognizerConfig | None = None) -> None:
        self.cfg = cfg or RecognizerConfig()
        self._group: _Group | None = None
        self._pending: _PendingTap3 | None = None
        self._last_t: int | None = None
        self._count = 0

    def feed(self, ev: TouchEvent, index: int | None = None) -> list[Gesture]:
        idx = self._count if index is None else index
        self._count += 1
        if self._last_t is not None and ev.t < self._last_t:
            raise StreamError("timestamp regression", idx)
        self._last_t = ev.t

        out: list[Gesture] = []
        g = self._group

        # A pending three-finger tap whose pairing window has closed can be
        # released as soon as time provably moved past the window.
        if (
            self._pending is not None
            and g is None
            and ev.t > self._pending.first_down_t + self.cfg.double_tap_window_ms
        ):
            out.append(self._pending.tap)
            self._pending = None

        if g is not None and not g.long_press_emitted:
            out.extend(self._maybe_start_long_press(ev.t))
            g = self._group

        if ev.phase is Phase.DOWN:
            out.extend(self._on_down(ev, idx))
        elif ev.phase is Phase.MOVE:
            out.extend(self._on_move(ev, idx))
        else:
            out.extend(self._on_up(ev, idx))
        return out

    def finish(self, strict: bool = True) -> list[Gesture]:
        """Flush pending state at end of stream.

        strict raises when pointers are still down (the stream broke the
        down/up pairing invariant); non-strict drops the incomplete group,
        which is what a live session does on disconnect.
        """
        out: list[Gesture] = []
        if self._group is not None:
            if strict:
                raise StreamError(
                    "stream ended with pointers still down",
                    self._group.first_event_index,
                )
            self._group = None
        if self._pending is not None:
            out.append(self._pending.tap)
            self._pending = None
        return out

    # -- event handling

    def _on_down(self, ev: TouchEvent, idx: int) -> list[Gesture]:
        out: list[Gesture] = []
        g = self._group
        if g is None:
            if (
                self._pending is not None
                and ev.t > self._pending.first_down_t + self.cfg.double_tap_window_ms
            ):
                out.append(self._pending.tap)
                self._pending = None
            self._group = _Group(first_down_t=ev.t, first_event_index=idx)
            g = self._group
        else:
            if ev.pointer_id in g.tracks and not g.tracks[ev.pointer_id].up:
                raise StreamError(f"pointer {ev.pointer_id} already down", idx)
            if ev.pointer_id in g.tracks:
                # Same finger re-landing inside one group fits no gesture
                # envelope; keep tracking but never classify.
                g.invalid = True
            if ev.t > g.first_down_t + self.cfg.multi_finger_window_ms:
                if g.long_press_emitted:
                    # Extra finger joining an active exploration is absorbed
                    # into the hover centroid.
                    pass
                else:
                    g.invalid = True
                    g.still = False
        g.tracks[ev.pointer_id] = _Track(down_pos=ev.pos, down_t=ev.t, last_pos=ev.pos)
        if ev.pointer_id not in g.order:
            g.order.append(ev.pointer_id)
        if ev.t > g.first_down_t + self.cfg.multi_finger_window_ms:
            g.downs_within_window = False
        return out

    def _on_move(self, ev: TouchEvent, idx: int) -> list[Gesture]:
        g = self._group
        if g is None or ev.pointer_id not in g.tracks or g.tracks[ev.pointer_id].up:
            raise StreamError(f"move for pointer {ev.pointer_id} that is not down", idx)
        track = g.tracks[ev.pointer_id]
        track.last_pos = ev.pos
        disp = (
            (ev.pos.x - track.down_pos.x) ** 2 + (ev.pos.y - track.down_pos.y) ** 2
        ) ** 0.5
        track.max_disp = max(track.max_disp, disp)
        if disp >= self.cfg.tap_slop_mm:
            g.still = False
        if g.long_press_emitted:
            return [Hover(t=ev.t, pos=_centroid(g.active_positions()))]
        return []

    def _on_up(self, ev: TouchEvent, idx: int) -> list[Gesture]:
        g = self._group
        if g is None or ev.pointer_id not in g.tracks or g.tracks[ev.pointer_id].up:
            raise StreamError(f"up for pointer {ev.pointer_id} that is not down", idx)
        track = g.tracks[ev.pointer_id]
        track.last_pos = ev.pos
        disp = (
            (ev.pos.x - track.down_pos.x) ** 2 + (ev.pos.y - track.down_pos.y) ** 2
        ) ** 0.5
        track.max_disp = max(track.max_disp, disp)
        if disp >= self.cfg.tap_slop_mm:
            g.still = False
        track.up = True
        track.up_t = ev.t
        if not g.all_up():
            g.still = False  # a lifted finger disqualifies a later long press
            return []
        self._group = None
        if g.long_press_emitted:
            return [LongPressEnd(t=ev.t, pos=_centroid(g.all_positions()))]
        return self._classify(g)

    def _maybe_start_long_press(self, now: int) -> list[Gesture]:
        """Emit LongPressStart when the hold threshold is crossed."""
        g = self._group
        assert g is not None
        threshold = g.first_down_t + self.cfg.long_press_min_ms
        if now < threshold:
            return []
        if g.invalid or not g.still or not g.downs_within_window:
            return []
        if not 1 <= len(g.tracks) <= 2:
            return []
        g.long_press_emitted = True
        start = LongPressStart(
            t=threshold, fingers=len(g.tracks), pos=_centroid(g.active_positions())
        )
        return self._flush_pending_before(start)

    def _classify(self, g: _Group) -> list[Gesture]:
        if g.invalid or not g.downs_within_window:
            return []
        n = len(g.tracks)
        duration = g.last_up_t() - g.first_down_t
        slop = self.cfg.tap_slop_mm
        if (
            1 <= n <= 4
            and duration <= self.cfg.tap_max_duration_ms
            and all(t.max_disp < slop for t in g.tracks.values())
        ):
            tap = Tap(t=g.last_up_t(), fingers=n, pos=_centroid(g.down_positions()))
            if n == 3:
                return self._handle_tap3(g.first_down_t, tap)
            return self._flush_pending_before(tap)
        if n in (1, 2) and duration <= self.cfg.swipe_max_duration_ms:
            start = _centroid(g.down_positions())
            end = _centroid([g.tracks[pid].last_pos for pid in g.order])
            dx = end.x - start.x
            dy = end.y - start.y
            if (dx * dx + dy * dy) ** 0.5 >= self.cfg.swipe_min_dist_mm:
                horizontal = abs(dx) >= abs(dy)  # exact diagonals resolve horizontal
                if horizontal and n == 1:
                    direction = SwipeDirection.RIGHT if dx > 0 else SwipeDirection.LEFT
                    return self._flush_pending_before(
                        Swipe(t=g.last_up_t(), fingers=1, direction=direction)
                    )
                if not horizontal and n == 2:
                    direction = SwipeDirection.DOWN if dy > 0 else SwipeDirection.UP
                    return self._flush_pending_before(
                        Swipe(t=g.last_up_t(), fingers=2, direction=direction)
                    )
        return []

    def _handle_tap3(self, first_down_t: int, tap: Tap) -> list[Gesture]:
        if self._pending is not None:
            if first_down_t - self._pending.first_down_t <= self.cfg.double_tap_window_ms:
                self._pending = None
                return [ThreeFingerDoubleTap(t=tap.t)]
            released = self._pending.tap
            self._pending = _PendingTap3(first_down_t=first_down_t, tap=tap)
            return [released]
        self._pending = _PendingTap3(first_down_t=first_down_t, tap=tap)
        return []

    def _flush_pending_before(self, gesture: Gesture) -> list[Gesture]:
        if self._pending is not None:
            released = self._pending.tap
            self._pending = None
            return [released, gesture]
        return [gesture]


def recognize(
    stream: list[TouchEvent], cfg: RecognizerConfig | None = None
) -> list[Gesture]:
    """Segment and classify a complete touch stream."""
    rec = IncrementalRecognizer(cfg)
    out: list[Gesture] = []
    for i, ev in enumerate(stream):
        out.extend(rec.feed(ev, i))
    out.extend(rec.finish(strict=True))
    return out
