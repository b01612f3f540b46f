"""On-disk and on-wire data formats.

Every document is a JSON envelope {"format", "version", "payload"}; readers
accept any version with a matching major. Transcripts are JSON lines (one
header line, then one feedback event per line). Millimeter values serialize
with 0.01 mm precision and milliseconds as integers so that written files
are byte-stable and golden-file diffs stay meaningful.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Any, Callable

from .errors import DomainError
from .feedback import CancelAll, Earcon, EarconKind, FeedbackEvent, Speech, Transcript
from .geometry import Point, Rect
from .gestures import Phase, RecognizerConfig, TouchEvent
from .overlay import (
    BuiltinOverlay,
    HorizontalEdge,
    MarkerStyle,
    Orientation,
    OverlayConfig,
    RowNumbering,
    VerticalEdge,
    builtin_overlay,
)
from .scenario import (
    AxisSpec,
    DataPoint,
    InterfaceScreen,
    Role,
    ScatterPlot,
    Scenario,
    UIElement,
)

FORMAT_VERSION = "1.0.0"
FORMATS = ("overlay", "scenario", "trace", "transcript")


class FormatError(Exception):
    """Base class for document parsing/validation failures."""


class JsonSyntaxError(FormatError):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class VersionMismatchError(FormatError):
    def __init__(self, found: str, supported: str) -> None:
        super().__init__(f"version {found!r} not understood (supported major: {supported})")
        self.found = found
        self.supported = supported


@dataclass(frozen=True)
class Violation:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


class SchemaViolationError(FormatError):
    def __init__(self, violations: list[Violation]) -> None:
        super().__init__(
            "; ".join(str(v) for v in violations) or "document is invalid"
        )
        self.violations = violations


def _mm(value: float) -> float:
    """Millimeter values carry 0.01 mm precision on the wire."""
    return round(value + 0.0, 2)


def _json_bytes(doc: dict[str, Any]) -> bytes:
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _envelope(fmt: str, payload: dict[str, Any]) -> dict[str, Any]:
    return {"format": fmt, "version": FORMAT_VERSION, "payload": payload}


# -- field checking helpers ---------------------------------------------------


class _Checker:
    """Collects violations with JSON-path locations while pulling fields."""

    def __init__(self) -> None:
        self.violations: list[Violation] = []

    def fail(self, path: str, message: str) -> None:
        self.violations.append(Violation(path, message))

    def obj(self, value: Any, path: str) -> dict | None:
        if not isinstance(value, dict):
            self.fail(path, f"expected object, got {type(value).__name__}")
            return None
        return value

    def field(self, obj: dict, path: str, name: str, required: bool = True) -> Any:
        if name not in obj:
            if required:
                self.fail(f"{path}.{name}", "missing required field")
            return None
        return obj[name]

    def string(self, obj: dict, path: str, name: str, required: bool = True) -> str | None:
        v = self.field(obj, path, name, required)
        if v is None:
            return None
        if not isinstance(v, str):
            self.fail(f"{path}.{name}", "expected string")
            return None
        return v

    def number(
        self, obj: dict, path: str, name: str, required: bool = True
    ) -> float | None:
        v = self.field(obj, path, name, required)
        if v is None:
            return None
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            self.fail(f"{path}.{name}", "expected number")
            return None
        if not math.isfinite(v):
            self.fail(f"{path}.{name}", "must be finite")
            return None
        return float(v)

    def integer(self, obj: dict, path: str, name: str, required: bool = True) -> int | None:
        v = self.field(obj, path, name, required)
        if v is None:
            return None
        if isinstance(v, bool) or not isinstance(v, int):
            self.fail(f"{path}.{name}", "expected integer")
            return None
        return v

    def enum(self, obj: dict, path: str, name: str, enum_cls, required: bool = True):
        v = self.string(obj, path, name, required)
        if v is None:
            return None
        try:
            return enum_cls(v)
        except ValueError:
            allowed = ", ".join(e.value for e in enum_cls)
            self.fail(f"{path}.{name}", f"must be one of: {allowed}")
            return None

    def rect(self, obj: dict, path: str, name: str) -> Rect | None:
        raw = self.field(obj, path, name)
        if raw is None:
            return None
        box = self.obj(raw, f"{path}.{name}")
        if box is None:
            return None
        x = self.number(box, f"{path}.{name}", "x")
        y = self.number(box, f"{path}.{name}", "y")
        w = self.number(box, f"{path}.{name}", "width")
        h = self.number(box, f"{path}.{name}", "height")
        if None in (x, y, w, h):
            return None
        if w <= 0 or h <= 0:
            self.fail(f"{path}.{name}", "width and height must be positive")
            return None
        return Rect(x, y, w, h)

    def raise_if_failed(self) -> None:
        if self.violations:
            raise SchemaViolationError(self.violations)


def _rect_payload(r: Rect) -> dict[str, float]:
    return {"x": _mm(r.x), "y": _mm(r.y), "width": _mm(r.width), "height": _mm(r.height)}


# -- overlay -------------------------------------------------------------------


def overlay_payload(cfg: OverlayConfig) -> dict[str, Any]:
    return {
        "name": cfg.name,
        "orientation": cfg.orientation.value,
        "screen_width_mm": _mm(cfg.screen_width_mm),
        "screen_height_mm": _mm(cfg.screen_height_mm),
        "rows": cfg.rows,
        "cols": cfg.cols,
        "pitch_mm": _mm(cfg.pitch_mm),
        "marker_size_mm": _mm(cfg.marker_size_mm),
        "marker_style": cfg.marker_style.value,
        "quadrant_interval": cfg.quadrant_interval,
        "row_axis_edge": cfg.row_axis_edge.value,
        "col_axis_edge": cfg.col_axis_edge.value,
        "row_numbering": cfg.row_numbering.value,
        "margin_mm": _mm(cfg.margin_mm),
    }


def dump_overlay(cfg: OverlayConfig) -> bytes:
    return _json_bytes(_envelope("overlay", overlay_payload(cfg)))


def _validate_overlay(payload: Any, path: str = "$.payload") -> OverlayConfig:
    c = _Checker()
    obj = c.obj(payload, path)
    if obj is None:
        c.raise_if_failed()
    name = c.string(obj, path, "name")
    orientation = c.enum(obj, path, "orientation", Orientation)
    width = c.number(obj, path, "screen_width_mm")
    height = c.number(obj, path, "screen_height_mm")
    rows = c.integer(obj, path, "rows")
    cols = c.integer(obj, path, "cols")
    pitch = c.number(obj, path, "pitch_mm")
    marker_size = c.number(obj, path, "marker_size_mm")
    style = c.enum(obj, path, "marker_style", MarkerStyle)
    row_edge = c.enum(obj, path, "row_axis_edge", HorizontalEdge)
    col_edge = c.enum(obj, path, "col_axis_edge", VerticalEdge)
    numbering = c.enum(obj, path, "row_numbering", RowNumbering)
    margin = c.number(obj, path, "margin_mm")
    interval = None
    if obj is not None and obj.get("quadrant_interval") is not None:
        interval = c.integer(obj, path, "quadrant_interval")
        if interval is not None and interval < 1:
            c.fail(f"{path}.quadrant_interval", "must be a positive integer")

    for field_name, v in (
        ("screen_width_mm", width),
        ("screen_height_mm", height),
        ("pitch_mm", pitch),
        ("marker_size_mm", marker_size),
    ):
        if v is not None and v <= 0:
            c.fail(f"{path}.{field_name}", "must be positive")
    for field_name, v in (("rows", rows), ("cols", cols)):
        if v is not None and v < 1:
            c.fail(f"{path}.{field_name}", "must be a positive integer")
    if margin is not None and margin < 0:
        c.fail(f"{path}.margin_mm", "must be non-negative")

    if None not in (width, height, rows, cols, pitch, margin):
        if cols * pitch + 2 * margin > width + 1e-9:
            c.fail(path, f"{cols} columns at pitch {pitch} do not fit width {width}")
        if rows * pitch + 2 * margin > height + 1e-9:
            c.fail(path, f"{rows} rows at pitch {pitch} do not fit height {height}")
    if marker_size is not None and pitch is not None and marker_size >= pitch:
        c.fail(f"{path}.marker_size_mm", "markers must be smaller than the pitch")
    if style is MarkerStyle.BRAILLE_LETTERS and rows is not None and rows > 26:
        c.fail(f"{path}.rows", "braille labels need rows <= 26")
    if style is MarkerStyle.BRAILLE_LETTERS and cols is not None and cols > 26:
        c.fail(f"{path}.cols", "braille labels need cols <= 26")
    if orientation is Orientation.LANDSCAPE and None not in (width, height) and width < height:
        c.fail(f"{path}.orientation", "landscape needs width >= height")
    if orientation is Orientation.PORTRAIT and None not in (width, height) and height < width:
        c.fail(f"{path}.orientation", "portrait needs height >= width")
    c.raise_if_failed()
    return OverlayConfig(
        name=name,
        orientation=orientation,
        screen_width_mm=width,
        screen_height_mm=height,
        rows=rows,
        cols=cols,
        pitch_mm=pitch,
        marker_size_mm=marker_size,
        marker_style=style,
        quadrant_interval=interval,
        row_axis_edge=row_edge,
        col_axis_edge=col_edge,
        row_numbering=numbering,
        margin_mm=margin,
    )


# -- scenario ------------------------------------------------------------------


def _axis_payload(axis: AxisSpec) -> dict[str, Any]:
    out: dict[str, Any] = {
        "label": axis.label,
        "min": axis.min_value,
        "max": axis.max_value,
        "step": axis.step,
    }
    if axis.unit is not None:
        out["unit"] = axis.unit
    return out


def scenario_payload(s: Scenario) -> dict[str, Any]:
    out: dict[str, Any] = {
        "kind": "scatterplot" if s.is_scatter else "interface",
        "overlay_kind": s.overlay_kind.value,
        "title": s.title,
    }
    if s.description is not None:
        out["description"] = s.description
    if s.is_scatter:
        plot = s.content
        assert isinstance(plot, ScatterPlot)
        out["x_axis"] = _axis_payload(plot.x_axis)
        out["y_axis"] = _axis_payload(plot.y_axis)
        out["plot_area_mm"] = _rect_payload(plot.plot_area_mm)
        out["item_noun"] = plot.item_noun
        out["points"] = [
            {
                "id": p.id,
                "label": p.label,
                "x": p.x,
                "y": p.y,
                "attrs": {k: v for k, v in p.attrs},
            }
            for p in plot.points
        ]
    else:
        screen = s.content
        assert isinstance(screen, InterfaceScreen)
        elements = []
        for e in screen.elements:
            entry: dict[str, Any] = {
                "id": e.id,
                "role": e.role.value,
                "label": e.label,
                "bounds_mm": _rect_payload(e.bounds_mm),
                "reading_index": e.reading_index,
            }
            if e.value is not None:
                entry["value"] = e.value
            elements.append(entry)
        out["elements"] = elements
    return out


def dump_scenario(s: Scenario) -> bytes:
    return _json_bytes(_envelope("scenario", scenario_payload(s)))


def _validate_axis(c: _Checker, raw: Any, path: str) -> AxisSpec | None:
    obj = c.obj(raw, path)
    if obj is None:
        return None
    label = c.string(obj, path, "label")
    mn = c.number(obj, path, "min")
    mx = c.number(obj, path, "max")
    step = c.number(obj, path, "step")
    unit = c.string(obj, path, "unit", required=False)
    if None in (label, mn, mx, step):
        return None
    if mn >= mx:
        c.fail(f"{path}.min", "min must be below max")
        return None
    if step <= 0 or step > mx - mn:
        c.fail(f"{path}.step", "step must be positive and at most max - min")
        return None
    return AxisSpec(label=label, min_value=mn, max_value=mx, step=step, unit=unit)


def _validate_scenario(payload: Any, path: str = "$.payload") -> Scenario:
    c = _Checker()
    obj = c.obj(payload, path)
    if obj is None:
        c.raise_if_failed()
    kind = c.string(obj, path, "kind")
    if kind is not None and kind not in ("scatterplot", "interface"):
        c.fail(f"{path}.kind", "must be one of: scatterplot, interface")
        kind = None
    overlay_kind = c.enum(obj, path, "overlay_kind", BuiltinOverlay)
    title = c.string(obj, path, "title")
    description = c.string(obj, path, "description", required=False)
    if kind is None or overlay_kind is None or title is None:
        c.raise_if_failed()
    screen = builtin_overlay(overlay_kind).screen_rect

    if kind == "scatterplot":
        x_axis = _validate_axis(c, obj.get("x_axis"), f"{path}.x_axis")
        y_axis = _validate_axis(c, obj.get("y_axis"), f"{path}.y_axis")
        area = c.rect(obj, path, "plot_area_mm")
        noun = c.string(obj, path, "item_noun", required=False) or "data points"
        raw_points = c.field(obj, path, "points")
        if area is not None and not screen.contains_rect(area):
            c.fail(f"{path}.plot_area_mm", "plot area must lie within the screen")
            area = None
        points: list[DataPoint] = []
        seen: dict[str, str] = {}
        if isinstance(raw_points, list):
            for i, raw in enumerate(raw_points):
                p_path = f"{path}.points[{i}]"
                entry = c.obj(raw, p_path)
                if entry is None:
                    continue
                pid = c.string(entry, p_path, "id")
                label = c.string(entry, p_path, "label")
                x = c.number(entry, p_path, "x")
                y = c.number(entry, p_path, "y")
                attrs_raw = entry.get("attrs", {})
                attrs: tuple[tuple[str, str], ...] = ()
                if not isinstance(attrs_raw, dict) or not all(
                    isinstance(k, str) and isinstance(v, str) for k, v in attrs_raw.items()
                ):
                    c.fail(f"{p_path}.attrs", "expected object of strings")
                else:
                    attrs = tuple(attrs_raw.items())
                if None in (pid, label, x, y):
                    continue
                if pid in seen:
                    c.fail(f"{p_path}.id", f"duplicate id {pid!r}, first used at {seen[pid]}")
                else:
                    seen[pid] = f"{p_path}.id"
                if x_axis is not None and not x_axis.min_value <= x <= x_axis.max_value:
                    c.fail(f"{p_path}.x", "outside the x axis range")
                if y_axis is not None and not y_axis.min_value <= y <= y_axis.max_value:
                    c.fail(f"{p_path}.y", "outside the y axis range")
                points.append(DataPoint(id=pid, label=label, x=x, y=y, attrs=attrs))
        elif raw_points is not None:
            c.fail(f"{path}.points", "expected array")
        c.raise_if_failed()
        plot = ScatterPlot(
            title=title,
            x_axis=x_axis,
            y_axis=y_axis,
            points=tuple(points),
            plot_area_mm=area,
            item_noun=noun,
        )
        return Scenario(content=plot, overlay_kind=overlay_kind, description=description)

    raw_elements = c.field(obj, path, "elements")
    elements: list[UIElement] = []
    seen_ids: dict[str, str] = {}
    indices: dict[int, str] = {}
    if isinstance(raw_elements, list):
        if not raw_elements:
            c.fail(f"{path}.elements", "a screen needs at least one element")
        for i, raw in enumerate(raw_elements):
            e_path = f"{path}.elements[{i}]"
            entry = c.obj(raw, e_path)
            if entry is None:
                continue
            eid = c.string(entry, e_path, "id")
            role = c.enum(entry, e_path, "role", Role)
            label = c.string(entry, e_path, "label")
            value = c.string(entry, e_path, "value", required=False)
            bounds = c.rect(entry, e_path, "bounds_mm")
            reading_index = c.integer(entry, e_path, "reading_index")
            if None in (eid, role, label, bounds, reading_index):
                continue
            if eid in seen_ids:
                c.fail(f"{e_path}.id", f"duplicate id {eid!r}, first used at {seen_ids[eid]}")
            else:
                seen_ids[eid] = f"{e_path}.id"
            if reading_index < 0:
                c.fail(f"{e_path}.reading_index", "must be non-negative")
                continue
            if reading_index in indices:
                c.fail(
                    f"{e_path}.reading_index",
                    f"duplicate reading_index {reading_index}, first used at {indices[reading_index]}",
                )
                continue
            indices[reading_index] = f"{e_path}.reading_index"
            if not screen.contains_rect(bounds):
                c.fail(f"{e_path}.bounds_mm", "element bounds must lie within the screen")
            elements.append(
                UIElement(
                    id=eid,
                    role=role,
                    label=label,
                    value=value,
                    bounds_mm=bounds,
                    reading_index=reading_index,
                )
            )
    elif raw_elements is not None:
        c.fail(f"{path}.elements", "expected array")
    if elements and sorted(indices) != list(range(len(indices))):
        c.fail(f"{path}.elements", "reading_index values must form a contiguous 0-based sequence")
    c.raise_if_failed()
    return Scenario(
        content=InterfaceScreen(title=title, elements=tuple(elements)),
        overlay_kind=overlay_kind,
        description=description,
    )


# -- trace ---------------------------------------------------------------------


def trace_payload(events: list[TouchEvent]) -> dict[str, Any]:
    return {
        "events": [
            {
                "pointer_id": e.pointer_id,
                "phase": e.phase.value,
                "x_mm": _mm(e.pos.x),
                "y_mm": _mm(e.pos.y),
                "t_ms": e.t,
            }
            for e in events
        ]
    }


def dump_trace(events: list[TouchEvent]) -> bytes:
    return _json_bytes(_envelope("trace", trace_payload(events)))


def _validate_trace(payload: Any, path: str = "$.payload") -> list[TouchEvent]:
    c = _Checker()
    obj = c.obj(payload, path)
    if obj is None:
        c.raise_if_failed()
    raw_events = c.field(obj, path, "events")
    events: list[TouchEvent] = []
    if isinstance(raw_events, list):
        last_t: int | None = None
        down: set[int] = set()
        for i, raw in enumerate(raw_events):
            e_path = f"{path}.events[{i}]"
            entry = c.obj(raw, e_path)
            if entry is None:
                continue
            pid = c.integer(entry, e_path, "pointer_id")
            phase = c.enum(entry, e_path, "phase", Phase)
            x = c.number(entry, e_path, "x_mm")
            y = c.number(entry, e_path, "y_mm")
            t = c.integer(entry, e_path, "t_ms")
            if None in (pid, phase, x, y, t):
                continue
            if pid < 0:
                c.fail(f"{e_path}.pointer_id", "must be non-negative")
                continue
            if t < 0:
                c.fail(f"{e_path}.t_ms", "must be non-negative")
                continue
            if last_t is not None and t < last_t:
                c.fail(f"{e_path}.t_ms", "timestamps must be non-decreasing")
            last_t = t
            if phase is Phase.DOWN:
                if pid in down:
                    c.fail(f"{e_path}.phase", f"pointer {pid} is already down")
                down.add(pid)
            else:
                if pid not in down:
                    c.fail(f"{e_path}.phase", f"pointer {pid} is not down")
                elif phase is Phase.UP:
                    down.discard(pid)
            events.append(TouchEvent(pointer_id=pid, phase=phase, pos=Point(x, y), t=t))
        if down:
            c.fail(f"{path}.events", f"pointers still down at end of trace: {sorted(down)}")
    elif raw_events is not None:
        c.fail(f"{path}.events", "expected array")
    c.raise_if_failed()
    return events


# -- recognizer config ---------------------------------------------------------


def recognizer_config_payload(cfg: RecognizerConfig) -> dict[str, Any]:
    return {
        "tap_max_duration_ms": cfg.tap_max_duration_ms,
        "long_press_min_ms": cfg.long_press_min_ms,
        "multi_finger_window_ms": cfg.multi_finger_window_ms,
        "double_tap_window_ms": cfg.double_tap_window_ms,
        "tap_slop_mm": _mm(cfg.tap_slop_mm),
        "swipe_min_dist_mm": _mm(cfg.swipe_min_dist_mm),
        "swipe_max_duration_ms": cfg.swipe_max_duration_ms,
    }


def recognizer_config_from_payload(payload: Any, path: str = "$") -> RecognizerConfig:
    """Build a RecognizerConfig from a bare JSON object of overrides."""
    c = _Checker()
    obj = c.obj(payload, path)
    c.raise_if_failed()
    defaults = RecognizerConfig()
    known = set(recognizer_config_payload(defaults))
    for key in obj:
        if key not in known:
            c.fail(f"{path}.{key}", "unknown recognizer setting")
    kwargs: dict[str, Any] = {}
    for name in ("tap_max_duration_ms", "long_press_min_ms", "multi_finger_window_ms",
                 "double_tap_window_ms", "swipe_max_duration_ms"):
        if name in obj:
            v = c.integer(obj, path, name)
            if v is not None:
                kwargs[name] = v
    for name in ("tap_slop_mm", "swipe_min_dist_mm"):
        if name in obj:
            v = c.number(obj, path, name)
            if v is not None:
                kwargs[name] = v
    c.raise_if_failed()
    cfg = RecognizerConfig(**kwargs)
    for problem in cfg.validate():
        c.fail(path, problem)
    c.raise_if_failed()
    return cfg


# -- envelope parsing ----------------------------------------------------------


_VALIDATORS: dict[str, Callable[[Any], Any]] = {
    "overlay": _validate_overlay,
    "scenario": _validate_scenario,
    "trace": _validate_trace,
}


def parse_and_validate(doc: bytes | str, expected: str):
    """Parse a document and validate it as the expected format.

    Raises JsonSyntaxError, VersionMismatchError, or SchemaViolationError;
    each violation carries a JSON-path location. Transcripts are JSON lines
    rather than a single envelope and are delegated to read_transcript.
    """
    if expected == "transcript":
        return read_transcript(doc)
    if expected not in _VALIDATORS:
        raise DomainError(f"unknown format {expected!r}")
    if isinstance(doc, bytes):
        doc = doc.decode("utf-8", errors="replace")
    try:
        data = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise JsonSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    c = _Checker()
    root = c.obj(data, "$")
    if root is None:
        c.raise_if_failed()
    fmt = c.string(root, "$", "format")
    version = c.string(root, "$", "version")
    payload = c.field(root, "$", "payload")
    if fmt is not None and fmt != expected:
        c.fail("$.format", f"expected {expected!r}, found {fmt!r}")
    c.raise_if_failed()
    if version.split(".")[0] != FORMAT_VERSION.split(".")[0]:
        raise VersionMismatchError(version, FORMAT_VERSION.split(".")[0])
    return _VALIDATORS[expected](payload)


def parse_overlay(doc: bytes | str) -> OverlayConfig:
    return parse_and_validate(doc, "overlay")


def parse_scenario(doc: bytes | str) -> Scenario:
    return parse_and_validate(doc, "scenario")


def parse_trace(doc: bytes | str) -> list[TouchEvent]:
    return parse_and_validate(doc, "trace")


def load_bundled_scenario(filename: str) -> Scenario:
    data = resources.files("tapnav").joinpath("fixtures", filename).read_bytes()
    return parse_scenario(data)


def load_bundled_trace(filename: str) -> list[TouchEvent]:
    data = resources.files("tapnav").joinpath("fixtures", "traces", filename).read_bytes()
    return parse_trace(data)


# -- transcript ----------------------------------------------------------------


def _event_line(e: FeedbackEvent) -> dict[str, Any]:
    if isinstance(e, Speech):
        return {"t": e.t, "kind": "speech", "text": e.text, "interrupts": e.interrupts}
    if isinstance(e, Earcon):
        return {"t": e.t, "kind": "earcon", "earcon": e.kind.value}
    if isinstance(e, CancelAll):
        return {"t": e.t, "kind": "cancel_all"}
    raise DomainError(f"unknown feedback event {e!r}")


def write_transcript(t: Transcript) -> bytes:
    header = {
        "format": "transcript",
        "version": FORMAT_VERSION,
        "scenario": t.scenario_name,
        "overlay": t.overlay_name,
        "config_hash": t.config_hash,
        "events": len(t.events),
    }
    lines = [json.dumps(header, ensure_ascii=False, separators=(",", ":"))]
    lines.extend(
        json.dumps(_event_line(e), ensure_ascii=False, separators=(",", ":"))
        for e in t.events
    )
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_transcript(data: bytes | str) -> Transcript:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    lines = data.splitlines()
    if not lines:
        raise SchemaViolationError([Violation("$", "empty transcript file")])

    def parse_line(i: int) -> dict[str, Any]:
        try:
            parsed = json.loads(lines[i])
        except json.JSONDecodeError as exc:
            raise JsonSyntaxError(f"transcript line {i + 1}: {exc.msg}", i + 1, exc.colno) from None
        if not isinstance(parsed, dict):
            raise SchemaViolationError([Violation(f"$.line[{i + 1}]", "expected object")])
        return parsed

    header = parse_line(0)
    c = _Checker()
    fmt = c.string(header, "$", "format")
    version = c.string(header, "$", "version")
    scenario_name = c.string(header, "$", "scenario")
    overlay_name = c.string(header, "$", "overlay")
    config_hash = c.string(header, "$", "config_hash")
    count = c.integer(header, "$", "events")
    if fmt is not None and fmt != "transcript":
        c.fail("$.format", f"expected 'transcript', found {fmt!r}")
    c.raise_if_failed()
    if version.split(".")[0] != FORMAT_VERSION.split(".")[0]:
        raise VersionMismatchError(version, FORMAT_VERSION.split(".")[0])

    events: list[FeedbackEvent] = []
    for i in range(1, len(lines)):
        entry = parse_line(i)
        path = f"$.line[{i + 1}]"
        lc = _Checker()
        t = lc.integer(entry, path, "t")
        kind = lc.string(entry, path, "kind")
        if kind == "speech":
            text = lc.string(entry, path, "text")
            interrupts = entry.get("interrupts")
            if not isinstance(interrupts, bool):
                lc.fail(f"{path}.interrupts", "expected boolean")
            lc.raise_if_failed()
            if not text:
                raise SchemaViolationError([Violation(f"{path}.text", "speech text must be non-empty")])
            events.append(Speech(t=t, text=text, interrupts=interrupts))
        elif kind == "earcon":
            earcon = lc.enum(entry, path, "earcon", EarconKind)
            lc.raise_if_failed()
            events.append(Earcon(t=t, kind=earcon))
        elif kind == "cancel_all":
            lc.raise_if_failed()
            events.append(CancelAll(t=t))
        else:
            lc.fail(f"{path}.kind", f"unknown event kind {kind!r}")
            lc.raise_if_failed()
    if count != len(events):
        raise SchemaViolationError(
            [Violation("$.events", f"header declares {count} events, file has {len(events)}")]
        )
    for prev, cur in zip(events, events[1:]):
        if cur.t < prev.t:
            raise SchemaViolationError([Violation("$", "events are not ordered by time")])
    return Transcript(
        events=tuple(events),
        scenario_name=scenario_name,
        overlay_name=overlay_name,
        config_hash=config_hash,
    )


# -- deterministic configuration hash -------------------------------------------


def session_config_hash(
    scenario: Scenario, overlay: OverlayConfig, cfg: RecognizerConfig
) -> str:
    doc = {
        "overlay": overlay_payload(overlay),
        "scenario": scenario_payload(scenario),
        "recognizer": recognizer_config_payload(cfg),
    }
    canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]
