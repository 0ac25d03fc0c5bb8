"""conicalq: double-precision evaluation of the real-valued conical (Mehler)
function companion Qt^m_{-1/2 + i tau}(x) for x > 1, integer m >= 0, tau >= 0.
"""

from .dispatch import (
    ConicalArgs,
    RoutingConfig,
    compute_qtilde,
    recurrence_residual,
    transition_point,
)
from .errors import (
    ConicalQError,
    ConvergenceError,
    DegenerateGeometryError,
    DomainError,
    RecursionOverflowError,
)
from .evaluation import Evaluation

__version__ = "0.1.0"

__all__ = [
    "ConicalArgs",
    "RoutingConfig",
    "compute_qtilde",
    "recurrence_residual",
    "transition_point",
    "Evaluation",
    "ConicalQError",
    "ConvergenceError",
    "DegenerateGeometryError",
    "DomainError",
    "RecursionOverflowError",
    "__version__",
]
