"""Mode state machine and gesture dispatcher.

dispatch() is a pure transition: it consumes one recognized gesture, returns
the next session state plus the feedback events it produced, and never
touches shared state, so sessions replay bit-identically.

Gesture mapping, by scenario kind:

Scatterplot: one-finger tap on an axis strip speaks that axis' scale; a
long press starts exploration by touch -- hovering announces marker
summaries and data points (with a cue), lifting summarizes what was
explored; four-finger tap speaks the visualization overview. Swipes and the
spatial-navigation toggle are dead.

Interface screen: a long press explores -- crossing an element ticks and
speaks it, crossing a marker surveys its line of sight; one-finger swipes
move the virtual cursor (thonk at the list ends); two-finger swipes read
continuously from the top or from the cursor; a three-finger double tap
toggles spatial navigation. In spatial navigation a hovered marker becomes
the active selection and all hovering/swiping is confined to its line of
sight; content outside the selection stays silent, and two-finger swipes
are disabled.

Everywhere: two-finger tap cancels audio, three-finger tap replays the last
spoken prompt. Anything else is a silent no-op.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .feedback import CancelAll, Earcon, EarconKind, FeedbackEvent, Speech, Transcript
from .geometry import Point
from .gestures import (
    Gesture,
    Hover,
    LongPressEnd,
    LongPressStart,
    RecognizerConfig,
    Swipe,
    SwipeDirection,
    Tap,
    ThreeFingerDoubleTap,
    TouchEvent,
    recognize,
)
from .mapping import (
    PlotAxis,
    check_match,
    hit_target,
    line_of_sight,
    scale_info,
    summarize_marker,
    visualization_overview,
)
from .overlay import (
    Axis,
    Marker,
    OverlayConfig,
    axis_strip,
    marker_at,
)
from .scenario import DataPoint, InterfaceScreen, ScatterPlot, Scenario, UIElement
from . import templates


class Mode(str, Enum):
    IDLE = "idle"
    EXPLORING = "exploring"
    SPATIAL_NAV = "spatial_nav"


@dataclass(frozen=True)
class SessionState:
    scenario: Scenario
    overlay: OverlayConfig
    mode: Mode = Mode.IDLE
    selection: Marker | None = None
    cursor: int | None = None
    last_prompt: str | None = None
    hover_focus: str | None = None
    explored: frozenset[str] = frozenset()

    @property
    def spatial_nav_available(self) -> bool:
        return self.scenario.is_interface


def initial_state(scenario: Scenario, overlay: OverlayConfig) -> SessionState:
    check_match(scenario, overlay)  # fail at session start, not mid-gesture
    return SessionState(scenario=scenario, overlay=overlay)


def _marker_key(m: Marker) -> str:
    if m.is_quadrant_line:
        return f"marker:{m.label}"
    return f"marker:{m.axis.value}:{m.index}"


def _quadrant_ordinal(m: Marker) -> int:
    # label is "quadrant line {k}"
    return int(m.label.rsplit(" ", 1)[-1])


def _elements(state: SessionState) -> list[UIElement]:
    screen = state.scenario.content
    assert isinstance(screen, InterfaceScreen)
    return screen.in_reading_order()


def _plot(state: SessionState) -> ScatterPlot:
    plot = state.scenario.content
    assert isinstance(plot, ScatterPlot)
    return plot


def dispatch(g: Gesture, s: SessionState) -> tuple[SessionState, list[FeedbackEvent]]:
    """Apply one gesture; returns the next state and the feedback it emitted."""
    if isinstance(g, Tap):
        s, events = _on_tap(g, s)
    elif isinstance(g, ThreeFingerDoubleTap):
        s, events = _on_toggle_spatial(g, s)
    elif isinstance(g, LongPressStart):
        s, events = _on_press_start(g, s)
    elif isinstance(g, Hover):
        s, events = _hover_eval(s, g.pos, g.t)
    elif isinstance(g, LongPressEnd):
        s, events = _on_press_end(g, s)
    elif isinstance(g, Swipe):
        s, events = _on_swipe(g, s)
    else:
        events = []
    spoken = [e.text for e in events if isinstance(e, Speech)]
    if spoken:
        s = replace(s, last_prompt=spoken[-1])
    return s, events


def run_session(
    trace: list[TouchEvent],
    scenario: Scenario,
    overlay: OverlayConfig,
    cfg: RecognizerConfig | None = None,
) -> Transcript:
    """recognize + fold dispatch from the initial state into a transcript."""
    from .formats import session_config_hash  # formats depends on engine types

    cfg = cfg or RecognizerConfig()
    state = initial_state(scenario, overlay)
    events: list[FeedbackEvent] = []
    for gesture in recognize(trace, cfg):
        state, emitted = dispatch(gesture, state)
        events.extend(emitted)
    return Transcript(
        events=tuple(events),
        scenario_name=scenario.title,
        overlay_name=overlay.name,
        config_hash=session_config_hash(scenario, overlay, cfg),
    )


# -- taps ------------------------------------------------------------------


def _on_tap(g: Tap, s: SessionState) -> tuple[SessionState, list[FeedbackEvent]]:
    if g.fingers == 2:
        return s, [CancelAll(t=g.t)]
    if g.fingers == 3:
        if s.last_prompt is None:
            return s, []
        return s, [Speech(t=g.t, text=s.last_prompt)]
    if not s.scenario.is_scatter:
        return s, []  # one- and four-finger taps are data-viz only
    if g.fingers == 4:
        text = templates.render_overview(visualization_overview(s.scenario))
        return s, [Speech(t=g.t, text=text)]
    if g.fingers == 1:
        axis = _axis_strip_at(s.overlay, g.pos)
        if axis is None:
            return s, []
        plot_axis = PlotAxis.X if axis is Axis.COLUMN else PlotAxis.Y
        text = templates.render_scale_info(scale_info(plot_axis, s.scenario))
        return s, [Speech(t=g.t, text=text)]
    return s, []


def _axis_strip_at(overlay: OverlayConfig, pos: Point) -> Axis | None:
    """Which axis strip a position falls in (column strip wins the corner)."""
    if not overlay.screen_rect.contains(pos):
        return None
    if axis_strip(overlay, Axis.COLUMN).contains(pos):
        return Axis.COLUMN
    if axis_strip(overlay, Axis.ROW).contains(pos):
        return Axis.ROW
    return None


def _on_toggle_spatial(
    g: ThreeFingerDoubleTap, s: SessionState
) -> tuple[SessionState, list[FeedbackEvent]]:
    if not s.spatial_nav_available:
        return s, []
    if s.mode is Mode.SPATIAL_NAV:
        # Leaving spatial navigation drops the selection but keeps the cursor.
        return replace(s, mode=Mode.IDLE, selection=None, hover_focus=None), []
    return replace(s, mode=Mode.SPATIAL_NAV, selection=None, hover_focus=None), []


# -- exploration ------------------------------------------------------------


def _on_press_start(
    g: LongPressStart, s: SessionState
) -> tuple[SessionState, list[FeedbackEvent]]:
    if s.scenario.is_scatter:
        s = replace(s, mode=Mode.EXPLORING, explored=frozenset(), hover_focus=None)
    elif s.mode is not Mode.SPATIAL_NAV:
        s = replace(s, mode=Mode.EXPLORING, hover_focus=None)
    else:
        s = replace(s, hover_focus=None)
    # The press position itself counts as the first hover sample.
    return _hover_eval(s, g.pos, g.t)


def _on_press_end(
    g: LongPressEnd, s: SessionState
) -> tuple[SessionState, list[FeedbackEvent]]:
    if s.scenario.is_scatter:
        plot = _plot(s)
        explored = [plot.point_by_id(pid) for pid in sorted(s.explored)]
        text = templates.render_explored_summary(explored, plot)
        return replace(s, mode=Mode.IDLE, hover_focus=None), [Speech(t=g.t, text=text)]
    if s.mode is Mode.SPATIAL_NAV:
        return replace(s, hover_focus=None), []
    return replace(s, mode=Mode.IDLE, hover_focus=None), []


def _hover_eval(
    s: SessionState, pos: Point, t: int
) -> tuple[SessionState, list[FeedbackEvent]]:
    if not s.overlay.screen_rect.contains(pos):
        return replace(s, hover_focus=None), []
    marker = marker_at(pos, s.overlay)
    if marker is not None:
        return _hover_marker(s, marker, t)
    target = hit_target(pos, s.scenario, s.overlay)
    if target is None:
        return replace(s, hover_focus=None), []
    if isinstance(target, DataPoint):
        return _hover_point(s, target, t)
    return _hover_element(s, target, t)


def _hover_marker(
    s: SessionState, m: Marker, t: int
) -> tuple[SessionState, list[FeedbackEvent]]:
    key = _marker_key(m)
    if key == s.hover_focus:
        return s, []
    s = replace(s, hover_focus=key)
    if m.is_quadrant_line:
        text = templates.render_quadrant_boundary(_quadrant_ordinal(m))
        return s, [Speech(t=t, text=text)]
    if s.scenario.is_scatter:
        summary = summarize_marker(m, s.scenario, s.overlay)
        text = templates.render_scatter_marker_summary(m, summary, _plot(s), s.overlay)
        return s, [Speech(t=t, text=text)]
    if s.mode is Mode.SPATIAL_NAV:
        los = line_of_sight(m, s.scenario, s.overlay)
        first = los.targets[0] if los.targets else None
        cursor = first.reading_index if isinstance(first, UIElement) else None
        s = replace(s, selection=m, cursor=cursor)
        return s, [Speech(t=t, text=templates.render_selection(m, len(los.targets)))]
    summary = summarize_marker(m, s.scenario, s.overlay)
    los = line_of_sight(m, s.scenario, s.overlay)
    first = los.targets[0] if los.targets else None
    text = templates.render_interface_marker_summary(
        m, summary, first if isinstance(first, UIElement) else None, s.overlay
    )
    return s, [Speech(t=t, text=text)]


def _hover_point(
    s: SessionState, p: DataPoint, t: int
) -> tuple[SessionState, list[FeedbackEvent]]:
    key = f"point:{p.id}"
    if key == s.hover_focus:
        return s, []
    s = replace(s, hover_focus=key, explored=s.explored | {p.id})
    text = templates.render_point_detail(p, _plot(s))
    return s, [Earcon(t=t, kind=EarconKind.DATA_POINT_CUE), Speech(t=t, text=text)]


def _hover_element(
    s: SessionState, e: UIElement, t: int
) -> tuple[SessionState, list[FeedbackEvent]]:
    key = f"element:{e.id}"
    if key == s.hover_focus:
        return s, []
    s = replace(s, hover_focus=key)
    if s.mode is Mode.SPATIAL_NAV:
        if s.selection is None or not _in_selection(s, e):
            return s, []  # outside the selected screen division: stay silent
        s = replace(s, cursor=e.reading_index)
        return s, [
            Earcon(t=t, kind=EarconKind.TICK),
            Speech(t=t, text=templates.element_text(e)),
        ]
    s = replace(s, cursor=e.reading_index)
    return s, [
        Earcon(t=t, kind=EarconKind.TICK),
        Speech(t=t, text=templates.element_text(e)),
    ]


def _in_selection(s: SessionState, e: UIElement) -> bool:
    assert s.selection is not None
    los = line_of_sight(s.selection, s.scenario, s.overlay)
    return any(isinstance(t, UIElement) and t.id == e.id for t in los.targets)


# -- swipe navigation --------------------------------------------------------


def _on_swipe(g: Swipe, s: SessionState) -> tuple[SessionState, list[FeedbackEvent]]:
    if not s.scenario.is_interface:
        return s, []
    if s.mode is Mode.SPATIAL_NAV:
        if g.fingers != 1:
            return s, []  # two-finger reading is disabled in spatial navigation
        return _swipe_in_selection(g, s)
    if g.fingers == 1:
        return _swipe_cursor(g, s)
    if g.direction is SwipeDirection.UP:
        return _read_from(s, 0, g.t)
    if g.direction is SwipeDirection.DOWN:
        return _read_from(s, s.cursor if s.cursor is not None else 0, g.t)
    return s, []


def _swipe_cursor(g: Swipe, s: SessionState) -> tuple[SessionState, list[FeedbackEvent]]:
    elements = _elements(s)
    forward = g.direction is SwipeDirection.RIGHT
    if s.cursor is None:
        target = elements[0] if forward else elements[-1]
    else:
        nxt = s.cursor + 1 if forward else s.cursor - 1
        if nxt < 0 or nxt >= len(elements):
            return s, [Earcon(t=g.t, kind=EarconKind.THONK)]
        target = elements[nxt]
    s = replace(s, cursor=target.reading_index)
    return s, [Speech(t=g.t, text=templates.element_text(target))]


def _swipe_in_selection(
    g: Swipe, s: SessionState
) -> tuple[SessionState, list[FeedbackEvent]]:
    if s.selection is None:
        return s, []
    los = line_of_sight(s.selection, s.scenario, s.overlay)
    targets = [t for t in los.targets if isinstance(t, UIElement)]
    if not targets:
        return s, [Earcon(t=g.t, kind=EarconKind.THONK)]
    forward = g.direction is SwipeDirection.RIGHT
    position = next(
        (i for i, e in enumerate(targets) if e.reading_index == s.cursor), None
    )
    if position is None:
        nxt = 0 if forward else len(targets) - 1
    else:
        nxt = position + 1 if forward else position - 1
        if nxt < 0 or nxt >= len(targets):
            return s, [Earcon(t=g.t, kind=EarconKind.THONK)]
    target = targets[nxt]
    s = replace(s, cursor=target.reading_index)
    text = templates.render_item_order(nxt + 1, len(targets), target)
    return s, [Speech(t=g.t, text=text)]


def _read_from(
    s: SessionState, start: int, t: int
) -> tuple[SessionState, list[FeedbackEvent]]:
    elements = _elements(s)
    chunk = elements[start:]
    events: list[FeedbackEvent] = [
        Speech(t=t, text=templates.element_text(e), interrupts=(i == 0))
        for i, e in enumerate(chunk)
    ]
    return s, events
