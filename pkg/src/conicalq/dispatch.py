"""Region selection, forward order-recursion, and diagnostic quantities.

For orders 0 and 1 the evaluation point is routed to one of three engines:
near-one series (x < x_cut and tau < tau_cut), Kummer expansion (x < x_cut,
tau >= tau_cut), large-x series otherwise; boundaries belong to the large-x /
Kummer side.  For m >= 2 seeds are computed at orders 0 and 1 and the
three-term recurrence

    Qt^{m+1} = (2 m x / sqrt(x^2-1)) Qt^m - ((m-1/2)^2 + tau^2) Qt^{m-1}

is applied forward — the stable direction, since Qt is a dominant solution.
The iterates grow rapidly with m; overflow is reported loudly with the
offending order rather than masked by scaling.
"""

import math
from dataclasses import dataclass

from .errors import DegenerateGeometryError, DomainError, RecursionOverflowError
from .evaluation import FORWARD_RECURRENCE, Evaluation
from .kummer import qtilde_kummer
from .large_x import qtilde_large_x
from .near_one import qtilde0_near_one, qtilde1_near_one

METHOD_AUTO = "auto"
METHOD_NEAR_ONE = "near-one"
METHOD_KUMMER = "kummer"
METHOD_LARGE_X = "large-x"


@dataclass(frozen=True)
class ConicalArgs:
    m: int
    tau: float
    x: float

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise DomainError(f"order m must be a non-negative integer, got {self.m!r}")
        if not (math.isfinite(self.tau) and self.tau >= 0.0):
            raise DomainError(f"tau must be finite and >= 0, got {self.tau!r}")
        if not (math.isfinite(self.x) and self.x > 1.0):
            raise DomainError(f"x must be finite and > 1, got {self.x!r}")


@dataclass(frozen=True)
class RoutingConfig:
    """Thresholds and term budgets; region boundaries are config, not code.

    kummer_terms defaults to 12: 8 terms reach ~1e-11 near tau = 10 while 12
    hold ~5e-13 throughout x < 1.1, tau in [10, 200].
    """

    x_cut: float = 1.1
    tau_cut: float = 10.0
    near_one_terms: int = 200
    large_x_terms: int = 500
    kummer_terms: int = 12


DEFAULT_CONFIG = RoutingConfig()


def _seed(mu, tau, x, config, method):
    if method == METHOD_NEAR_ONE:
        engine = "near_one"
    elif method == METHOD_KUMMER:
        engine = "kummer"
    elif method == METHOD_LARGE_X:
        engine = "large_x"
    elif x < config.x_cut and tau < config.tau_cut:
        engine = "near_one"
    elif x < config.x_cut:
        engine = "kummer"
    else:
        engine = "large_x"

    if engine == "near_one":
        fn = qtilde0_near_one if mu == 0 else qtilde1_near_one
        return fn(tau, x, max_terms=config.near_one_terms)
    if engine == "kummer":
        return qtilde_kummer(mu, tau, x, K=config.kummer_terms)
    return qtilde_large_x(mu, tau, x, max_terms=config.large_x_terms)


def compute_qtilde(args, config=DEFAULT_CONFIG, method=METHOD_AUTO):
    """Evaluate Qt^m_{-1/2+i tau}(x).

    method forces a seed engine ("near-one", "kummer", "large-x"); "auto"
    applies the routing thresholds.  Forcing an engine outside its domain
    raises that engine's own guard error.
    """
    if method not in (METHOD_AUTO, METHOD_NEAR_ONE, METHOD_KUMMER, METHOD_LARGE_X):
        raise DomainError(f"unknown method override {method!r}")
    seed_method = None if method == METHOD_AUTO else method
    if args.m in (0, 1):
        return _seed(args.m, args.tau, args.x, config, seed_method)

    e0 = _seed(0, args.tau, args.x, config, seed_method)
    e1 = _seed(1, args.tau, args.x, config, seed_method)
    coef = 2.0 * args.x / math.sqrt((args.x - 1.0) * (args.x + 1.0))
    prev, cur = e0.value, e1.value
    for m in range(1, args.m):
        prev, cur = cur, coef * m * cur - ((m - 0.5) ** 2 + args.tau ** 2) * prev
        if not math.isfinite(cur):
            raise RecursionOverflowError(m + 1)
    return Evaluation(
        value=cur,
        method=FORWARD_RECURRENCE,
        terms_used=e0.terms_used + e1.terms_used,
        error_estimate=max(e0.error_estimate, e1.error_estimate),
    )


def transition_point(m, tau):
    """x_c = sqrt(1+beta^2)/beta, beta = tau/m: boundary between the monotonic
    interval (1, x_c) and the oscillatory regime beyond it."""
    if m < 1:
        raise DomainError(f"requires m >= 1, got {m}")
    if not (tau > 0.0 and math.isfinite(tau)):
        raise DomainError(f"requires tau > 0, got {tau}")
    beta = tau / m
    return math.sqrt(1.0 + beta * beta) / beta


def recurrence_residual(m, tau, x, evals):
    """|LHS - 1| with LHS = (coef*m*Qt^m - ((m-1/2)^2+tau^2) Qt^{m-1}) / Qt^{m+1}.

    evals holds independently computed Evaluations for orders m-1, m, m+1
    (never produced by recursion from each other); the residual is the
    oracle-free self-test of the three engines.
    """
    if m < 1:
        raise DomainError(f"requires m >= 1, got {m}")
    e_lo, e_mid, e_hi = evals
    if abs(e_hi.value) < 1e-300:
        raise DegenerateGeometryError(
            f"Qt^(m+1) ~ 0 at m={m}, tau={tau}, x={x}: residual undefined"
        )
    coef = 2.0 * m * x / math.sqrt((x - 1.0) * (x + 1.0))
    lhs = (coef * e_mid.value - ((m - 0.5) ** 2 + tau * tau) * e_lo.value) / e_hi.value
    return abs(lhs - 1.0)
