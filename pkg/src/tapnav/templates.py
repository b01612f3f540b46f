"""Speech prompt templates.

The template text is part of the external contract: golden transcripts
depend on it, so any change here is a breaking change and must bump the
template version. Counts inside marker and exploration summaries are spoken
as words ("four movies"); navigation and selection prompts use digits
("5 screen elements on row 10").
"""

from __future__ import annotations

from .mapping import MarkerSummary, Overview, ScaleInfo
from .overlay import Axis, Marker, MarkerStyle, OverlayConfig
from .scenario import DataPoint, ScatterPlot, UIElement

TEMPLATE_VERSION = "1.0.0"

_TEMPLATES: dict[str, str] = {
    "scale_info": "{axis} axis: {label}, from {min} to {max} in steps of {step}",
    "scale_info_unit": "{axis} axis: {label}, from {min} to {max} in steps of {step} {unit}",
    "overview": "{title}: {total} {noun}. {x_info}. {y_info}",
    "marker_summary_empty": "{marker}: no {noun}",
    "marker_summary_uniform": "{marker}: {count} {noun} with {value} {value_label}",
    "marker_summary_range": "{marker}: {count} {noun}, {value_label} from {min} to {max}",
    # {marker} resolves via marker_phrase(); counts here are spoken as words.
    "marker_summary_quadrant": ", in quadrant {quadrant}",
    "marker_summary_quadrant_counts": ", quadrant counts {counts}",
    "point_detail": "{label}: {x_label} {x}, {y_label} {y}",
    "explored_none": "no data points explored",
    "explored_uniform": "explored {count} {noun} with {value} {value_label}",
    "explored_range": "explored {count} {noun}, {value_label} from {min} to {max}",
    "survey": "{count} screen elements on {axis} {index}. First: {first}",
    "survey_empty": "no screen elements on {axis} {index}",
    "selection": "{count} screen elements on {axis} {index}, selecting first",
    "selection_empty": "no screen elements on {axis} {index}",
    "item_order": "item {position} of {count}: {label}",
    "element": "{label}",
    "element_with_value": "{label}, {value}",
    "quadrant_boundary": "quadrant boundary {ordinal}",
}

_COUNT_WORDS = (
    "zero one two three four five six seven eight nine ten eleven twelve "
    "thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty"
).split()


def prompt_templates() -> dict[str, str]:
    """The fixed, versioned template table (copy)."""
    return dict(_TEMPLATES)


def fmt_number(value: float) -> str:
    """Speak-friendly numbers: integers without a decimal point."""
    if isinstance(value, bool):
        raise TypeError("booleans are not speakable numbers")
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def count_word(n: int) -> str:
    if 0 <= n < len(_COUNT_WORDS):
        return _COUNT_WORDS[n]
    return str(n)


def marker_phrase(m: Marker, overlay: OverlayConfig) -> str:
    """Spoken identity of a marker.

    Cutout markers keep their tactile name ("column marker 7"); lettered or
    plain markers are spoken by grid index ("row 10"), which is what users
    map the letters to.
    """
    axis_word = "row" if m.axis is Axis.ROW else "column"
    if overlay.marker_style is MarkerStyle.CUTOUT_SHAPES:
        return f"{axis_word} {m.label}"
    return f"{axis_word} {m.index}"


def element_text(e: UIElement) -> str:
    if e.value is not None:
        return _TEMPLATES["element_with_value"].format(label=e.label, value=e.value)
    return _TEMPLATES["element"].format(label=e.label)


def render_scale_info(info: ScaleInfo) -> str:
    key = "scale_info_unit" if info.unit else "scale_info"
    return _TEMPLATES[key].format(
        axis=info.axis.value,
        label=info.label,
        min=fmt_number(info.min_value),
        max=fmt_number(info.max_value),
        step=fmt_number(info.step),
        unit=info.unit or "",
    )


def render_overview(o: Overview) -> str:
    return _TEMPLATES["overview"].format(
        title=o.title,
        total=o.total,
        noun=o.item_noun,
        x_info=render_scale_info(o.x_info),
        y_info=render_scale_info(o.y_info),
    )


def _singular(noun: str) -> str:
    return noun[:-1] if noun.endswith("s") else noun


def _count_with_values(
    key_uniform: str, key_range: str, count: int, noun: str,
    value_label: str, min_value: float, max_value: float, **extra: str,
) -> str:
    if count == 1:
        noun = _singular(noun)
    if min_value == max_value:
        return _TEMPLATES[key_uniform].format(
            count=count_word(count), noun=noun,
            value=fmt_number(min_value), value_label=value_label, **extra,
        )
    return _TEMPLATES[key_range].format(
        count=count_word(count), noun=noun, value_label=value_label,
        min=fmt_number(min_value), max=fmt_number(max_value), **extra,
    )


def render_scatter_marker_summary(
    m: Marker, summary: MarkerSummary, plot: ScatterPlot, overlay: OverlayConfig
) -> str:
    phrase = marker_phrase(m, overlay)
    value_label = plot.y_axis.label if m.axis is Axis.COLUMN else plot.x_axis.label
    if summary.count == 0:
        text = _TEMPLATES["marker_summary_empty"].format(marker=phrase, noun=plot.item_noun)
    else:
        text = _count_with_values(
            "marker_summary_uniform", "marker_summary_range",
            summary.count, plot.item_noun, value_label,
            summary.min_value, summary.max_value, marker=phrase,
        )
    if summary.quadrant_counts is not None:
        if m.axis is Axis.COLUMN:
            from .overlay import quadrant_of_column

            text += _TEMPLATES["marker_summary_quadrant"].format(
                quadrant=quadrant_of_column(overlay, m.index)
            )
        else:
            counts = ", ".join(str(n) for _, n in summary.quadrant_counts)
            text += _TEMPLATES["marker_summary_quadrant_counts"].format(counts=counts)
    return text


def render_interface_marker_summary(
    m: Marker, summary: MarkerSummary, first: UIElement | None, overlay: OverlayConfig
) -> str:
    axis_word = "row" if m.axis is Axis.ROW else "column"
    if summary.count == 0 or first is None:
        return _TEMPLATES["survey_empty"].format(axis=axis_word, index=m.index)
    return _TEMPLATES["survey"].format(
        count=summary.count, axis=axis_word, index=m.index, first=element_text(first)
    )


def render_selection(m: Marker, count: int) -> str:
    axis_word = "row" if m.axis is Axis.ROW else "column"
    if count == 0:
        return _TEMPLATES["selection_empty"].format(axis=axis_word, index=m.index)
    return _TEMPLATES["selection"].format(count=count, axis=axis_word, index=m.index)


def render_point_detail(p: DataPoint, plot: ScatterPlot) -> str:
    return _TEMPLATES["point_detail"].format(
        label=p.label,
        x_label=plot.x_axis.label,
        x=fmt_number(p.x),
        y_label=plot.y_axis.label,
        y=fmt_number(p.y),
    )


def render_explored_summary(points: list[DataPoint], plot: ScatterPlot) -> str:
    if not points:
        return _TEMPLATES["explored_none"]
    if len(points) == 1:
        return render_point_detail(points[0], plot)
    values = [p.y for p in points]
    return _count_with_values(
        "explored_uniform", "explored_range",
        len(points), plot.item_noun, plot.y_axis.label, min(values), max(values),
    )


def render_item_order(position: int, count: int, e: UIElement) -> str:
    return _TEMPLATES["item_order"].format(
        position=position, count=count, label=element_text(e)
    )


def render_quadrant_boundary(ordinal: int) -> str:
    return _TEMPLATES["quadrant_boundary"].format(ordinal=ordinal)
