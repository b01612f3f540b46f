"""Exception types shared across the engine."""

from __future__ import annotations


class DomainError(ValueError):
    """A precondition of a geometry/scenario/engine operation was violated."""


class StreamError(ValueError):
    """A touch event stream broke an invariant (time regression, unmatched up, ...).

    Carries the index of the offending event within the stream.
    """

    def __init__(self, message: str, event_index: int) -> None:
        super().__init__(f"event {event_index}: {message}")
        self.event_index = event_index
