"""Series evaluation of Q-tilde for orders 0 and 1 near x = 1.

The order-0 series is

    Qt0 = sum_k p_k/(k!)^2 z^k (psi(k+1) - Re psi(1/2 + i tau) - ln w)

with z = (1-x)/2, w = sqrt((x-1)/(x+1)), and p_k = (1/2-i tau)_k (1/2+i tau)_k,
which is real and positive.  The order-1 value is obtained by term-wise
differentiation, Qt1 = -sqrt(x^2-1) d/dx Qt0; the overall sign carries the
e^{-i pi} phase of the order-1 definition.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .evaluation import NEAR_ONE_SERIES, Evaluation
from .kernels import EULER_GAMMA, digamma

DEFAULT_MAX_TERMS = 200
STOP_RELATIVE = 1e-16

# |z| < 1 requires x < 3; the dispatcher only sends x < 1.1 here anyway.
X_CONVERGENCE_LIMIT = 3.0


@dataclass(frozen=True)
class NearOneGeometry:
    z: float
    w: float
    lnw: float
    x: float


def near_one_geometry(x):
    if not (x > 1.0 and math.isfinite(x)):
        raise DomainError(f"requires x > 1, got {x}")
    # ln w = (ln(x-1) - ln(x+1))/2 stays accurate as x -> 1+, where w underflows
    return NearOneGeometry(
        z=0.5 * (1.0 - x),
        w=math.sqrt((x - 1.0) / (x + 1.0)),
        lnw=0.5 * (math.log(x - 1.0) - math.log(x + 1.0)),
        x=x,
    )


def pochhammer_products(tau, n):
    """p_0..p_n with p_k = (1/2-i tau)_k (1/2+i tau)_k = prod ((j+1/2)^2+tau^2)."""
    p = [1.0]
    for k in range(n):
        p.append(p[k] * ((k + 0.5) ** 2 + tau * tau))
    return p


def _sum_series(mu, tau, x, max_terms):
    geom = near_one_geometry(x)
    if x >= X_CONVERGENCE_LIMIT:
        raise DomainError(f"series converges only for x < {X_CONVERGENCE_LIMIT}, got {x}")
    re_psi = digamma(complex(0.5, tau)).real
    sq = math.sqrt((x - 1.0) * (x + 1.0))
    psi_k = -EULER_GAMMA  # psi(k+1), starting at psi(1)
    p = 1.0               # p_k / (k!)^2
    zk = 1.0
    zkm1 = 0.0
    total = 0.0
    for k in range(max_terms):
        a_k = psi_k - re_psi - geom.lnw
        if mu == 0:
            term = p * zk * a_k
        else:
            term = p * (0.5 * k * sq * zkm1 * a_k + zk / sq)
        total += term
        if k > 0 and abs(term) <= STOP_RELATIVE * abs(total):
            return Evaluation(
                value=total,
                method=NEAR_ONE_SERIES,
                terms_used=k + 1,
                error_estimate=abs(term),
            )
        p *= ((k + 0.5) ** 2 + tau * tau) / ((k + 1.0) ** 2)
        zkm1 = zk
        zk *= geom.z
        psi_k += 1.0 / (k + 1)
    raise ConvergenceError(
        f"series for mu={mu} did not converge in {max_terms} terms at tau={tau}, x={x}"
    )


def qtilde0_near_one(tau, x, max_terms=DEFAULT_MAX_TERMS):
    """Order-0 Q-tilde near x = 1."""
    return _sum_series(0, tau, x, max_terms)


def qtilde1_near_one(tau, x, max_terms=DEFAULT_MAX_TERMS):
    """Order-1 Q-tilde near x = 1, via the derivative of the order-0 series."""
    return _sum_series(1, tau, x, max_terms)
