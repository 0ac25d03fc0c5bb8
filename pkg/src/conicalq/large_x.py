"""Hypergeometric-series evaluation of Q-tilde for moderate and large x.

    Qt_mu = Re{ sqrt(pi/2) (x^2-1)^(-1/4) e^{-i tau ln(x+s)}
                * Gamma(1/2+mu+i tau)/Gamma(1+i tau)
                * sum_k (1/2+mu)_k (1/2-mu)_k r_k (-z)^k / k! }

with s = sqrt(x^2-1), z = 1/(2 s (x+s)), and r_k = 1/(1+i tau)_k carried as a
complex iterate (the separate numerator/denominator form overflows).  z < 1
for x above ~1.061; at the x = 1.1 dispatcher boundary z ~ 0.70 and the series
needs ~110 terms but still converges cleanly.
"""

import math
from dataclasses import dataclass

from .ddouble import phase_factor
from .errors import ConvergenceError, DomainError
from .evaluation import LARGE_X_SERIES, Evaluation
from .kernels import gamma_ratio

DEFAULT_MAX_TERMS = 500
STOP_RELATIVE = 1e-16
X_MIN = 1.1


@dataclass(frozen=True)
class LargeXGeometry:
    s: float
    z: float
    phase: float
    prefactor: float


def large_x_geometry(x, tau):
    if not (x > 1.0 and math.isfinite(x)):
        raise DomainError(f"requires x > 1, got {x}")
    t = (x - 1.0) * (x + 1.0)
    s = math.sqrt(t)
    return LargeXGeometry(
        s=s,
        z=1.0 / (2.0 * s * (x + s)),
        phase=tau * math.log(x + s),
        prefactor=math.sqrt(math.pi / 2.0) * t ** -0.25,
    )


@dataclass(frozen=True)
class InversePochhammerState:
    """r = 1/(1+i tau)_k at index k."""

    r: complex
    k: int


def inverse_pochhammer_step(state, tau):
    return InversePochhammerState(r=state.r / complex(state.k + 1, tau), k=state.k + 1)


def qtilde_large_x(mu, tau, x, max_terms=DEFAULT_MAX_TERMS, term_trace=None):
    """Q-tilde of order mu in {0, 1, 2} for x >= 1.1, any tau >= 0.

    If term_trace is a list, the magnitude of every summed term is appended to
    it (used by tests to check eventual monotone decay).
    """
    if mu not in (0, 1, 2):
        raise DomainError(f"order must be in {{0, 1, 2}}, got {mu}")
    if x < X_MIN:
        raise DomainError(f"requires x >= {X_MIN}, got {x}")
    geom = large_x_geometry(x, tau)
    amp = geom.prefactor * phase_factor(tau, x + geom.s) * gamma_ratio(mu, tau)
    state = InversePochhammerState(r=1 + 0j, k=0)
    poch = 1.0  # (1/2+mu)_k (1/2-mu)_k / k!
    mzk = 1.0   # (-z)^k
    total = 0j
    for k in range(max_terms):
        term = poch * state.r * mzk
        total += term
        if term_trace is not None:
            term_trace.append(abs(term))
        if k > 0 and abs(term) <= STOP_RELATIVE * abs(total):
            return Evaluation(
                value=(amp * total).real,
                method=LARGE_X_SERIES,
                terms_used=k + 1,
                error_estimate=abs(term) / abs(total),
            )
        state = inverse_pochhammer_step(state, tau)
        poch *= (0.5 + mu + k) * (0.5 - mu + k) / (k + 1.0)
        mzk *= -geom.z
    raise ConvergenceError(
        f"series for mu={mu} did not converge in {max_terms} terms at tau={tau}, x={x}"
    )
