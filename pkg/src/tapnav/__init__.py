"""Deterministic engine for an adaptive spatiotactile screen reader."""

from .engine import Mode, SessionState, dispatch, initial_state, run_session
from .errors import DomainError, StreamError
from .feedback import CancelAll, Earcon, EarconKind, FeedbackEvent, Speech, Transcript
from .gestures import (
    Gesture,
    Hover,
    IncrementalRecognizer,
    LongPressEnd,
    LongPressStart,
    Phase,
    RecognizerConfig,
    Swipe,
    SwipeDirection,
    Tap,
    ThreeFingerDoubleTap,
    TouchEvent,
    recognize,
)
from .geometry import Point, Rect
from .mapping import (
    LineOfSight,
    MarkerSummary,
    Overview,
    PlotAxis,
    ScaleInfo,
    hit_target,
    line_of_sight,
    scale_info,
    summarize_marker,
    visualization_overview,
)
from .overlay import (
    Axis,
    BuiltinOverlay,
    GridCell,
    Marker,
    MarkerShape,
    MarkerStyle,
    Orientation,
    OverlayConfig,
    RowNumbering,
    band_extent,
    builtin_overlay,
    cell_at,
    label_for,
    marker_at,
    markers,
)
from .scenario import (
    AxisSpec,
    DataPoint,
    FixtureName,
    InterfaceScreen,
    Role,
    ScatterPlot,
    Scenario,
    UIElement,
    elements_in,
    load_fixture,
    points_in,
    project_point,
)
from .svg import export_overlay_svg
from .templates import prompt_templates

__version__ = "1.0.0"
