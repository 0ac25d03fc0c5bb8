"""Result record shared by every evaluation engine."""

import math
from dataclasses import dataclass

NEAR_ONE_SERIES = "NearOneSeries"
LARGE_TAU_KUMMER = "LargeTauKummer"
LARGE_X_SERIES = "LargeXSeries"
FORWARD_RECURRENCE = "ForwardRecurrence"

METHODS = (NEAR_ONE_SERIES, LARGE_TAU_KUMMER, LARGE_X_SERIES, FORWARD_RECURRENCE)


@dataclass(frozen=True)
class Evaluation:
    """A computed function value with provenance of the computation.

    error_estimate is a truncation indicator (magnitude of the last retained
    term relative to the sum), not a certified bound.
    """

    value: float
    method: str
    terms_used: int
    error_estimate: float

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite evaluation value {self.value!r}")
