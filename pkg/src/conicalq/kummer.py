"""Large-tau evaluation of Q-tilde near x = 1 via a Kummer-U expansion.

    Qt_mu = Re{ sqrt(pi/2) alpha^(mu+1/2) (x^2-1)^(-1/4)
                e^{-i tau ln(x+s)} sum_{k<=K} f_k Phi_k }

where alpha = ln((z+1)/z) with the same z as the large-x series.  The Phi_k
are Kummer-U values seeded from Hankel functions of argument alpha*tau/2 and
advanced by a short forward recurrence; the f_k are the Taylor coefficients of

    f(t) = ( (1-e^{-t})/t * (e^t-e^{-alpha})/(t+alpha) * alpha/(1-e^{-alpha}) )^b

with b = -mu-1/2, generated by truncated-series arithmetic.
"""

import math
from dataclasses import dataclass

from .bessel import hankel2
from .ddouble import phase_factor
from .errors import DegenerateGeometryError, DomainError
from .evaluation import LARGE_TAU_KUMMER, Evaluation

MAX_ORDER = 16       # f_k beyond this are numerically fragile in doubles
ALPHA_FLOOR = 1e-8   # below this x is indistinguishable from 1
TAU_FLOOR = 5.0      # validity floor of the expansion
DEFAULT_TERMS = 8


@dataclass(frozen=True)
class KummerGeometry:
    z: float
    alpha: float
    omega: complex
    b: float   # exponent of f(t), -mu-1/2
    d: float   # z * alpha


def kummer_geometry(mu, tau, x):
    if not (x > 1.0 and math.isfinite(x)):
        raise DomainError(f"requires x > 1, got {x}")
    t = (x - 1.0) * (x + 1.0)
    s = math.sqrt(t)
    z = 1.0 / (2.0 * s * (x + s))
    alpha = math.log1p(1.0 / z)
    if alpha < ALPHA_FLOOR:
        raise DegenerateGeometryError(
            f"alpha={alpha:.3e} too small (x={x} indistinguishable from 1)"
        )
    return KummerGeometry(z=z, alpha=alpha, omega=complex(0.0, tau),
                          b=-mu - 0.5, d=z * alpha)


@dataclass(frozen=True)
class TruncatedSeries:
    """Taylor-coefficient prefix c_0..c_order with Cauchy-product arithmetic."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")

    def mul(self, other):
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [
            sum(a[j] * b[n - j]
                for j in range(max(0, n - other.order), min(n, self.order) + 1))
            for n in range(k + 1)
        ]
        return TruncatedSeries(tuple(out), k)

    def scale(self, factor):
        return TruncatedSeries(tuple(factor * c for c in self.coeffs), self.order)

    def log(self):
        # l' p = p'  =>  n l_n p_0 = n p_n - sum_{j<n} j l_j p_{n-j}
        p = self.coeffs
        out = [math.log(p[0])]
        for n in range(1, self.order + 1):
            acc = n * p[n]
            for j in range(1, n):
                acc -= j * out[j] * p[n - j]
            out.append(acc / (n * p[0]))
        return TruncatedSeries(tuple(out), self.order)

    def exp(self):
        # e' = p' e  =>  n e_n = sum_{j<=n} j p_j e_{n-j}
        p = self.coeffs
        out = [math.exp(p[0])]
        for n in range(1, self.order + 1):
            acc = 0.0
            for j in range(1, n + 1):
                acc += j * p[j] * out[n - j]
            out.append(acc / n)
        return TruncatedSeries(tuple(out), self.order)

    def power(self, exponent):
        return self.log().scale(exponent).exp()


def f_coefficients(mu, geometry, K):
    """Taylor coefficients f_0..f_K of f(t); f_0 = 1 exactly.

    The middle factor is expanded through the identity
    (e^t - e^{-alpha})/(t + alpha) = e^{-alpha} h(t + alpha), h(u) = (e^u-1)/u,
    whose Taylor coefficients about t = 0 are the all-positive sums
    e^{-alpha} sum_{n>=j} C(n,j) alpha^{n-j}/(n+1)! — no cancellation at any
    alpha, unlike the direct alternating expansion.
    """
    if K > MAX_ORDER:
        raise DomainError(f"order limited to {MAX_ORDER}, got {K}")
    alpha = geometry.alpha
    g1 = TruncatedSeries(
        tuple((-1) ** k / math.factorial(k + 1) for k in range(K + 1)), K
    )
    ea = math.exp(-alpha)
    g2 = []
    for j in range(K + 1):
        t = 1.0 / math.factorial(j + 1)
        acc = t
        n = j
        while True:
            t *= alpha * (n + 1) / ((n + 1 - j) * (n + 2))
            acc += t
            n += 1
            if t < 1e-22 * acc:
                break
        g2.append(ea * acc)
    g2 = TruncatedSeries(tuple(g2), K)
    scale = alpha / (-math.expm1(-alpha))
    p = g1.mul(g2).scale(scale)  # p_0 = 1 up to rounding
    f = p.power(geometry.b)
    coeffs = (1.0,) + f.coeffs[1:]
    return TruncatedSeries(coeffs, K)


def _hankel2_any(order, x):
    if order == -1:
        return -hankel2(1, x)
    if order in (0, 1):
        return hankel2(order, x)
    hm1, h = hankel2(0, x), hankel2(1, x)
    for n in range(1, order):
        hm1, h = h, (2 * n / x) * h - hm1
    return h


@dataclass(frozen=True)
class PhiTable:
    phi: tuple
    geometry: KummerGeometry
    mu: int


def phi_table(mu, tau, geometry, K):
    """Phi_0..Phi_K from Hankel-function seeds and forward recurrence.

    Phi_0 = -i/2 sqrt(pi) (tau/alpha)^mu e^{i alpha tau/2} H2_mu(alpha tau/2)
    Phi_1 = alpha/4 sqrt(pi) (tau/alpha)^mu e^{i alpha tau/2}
            (i H2_mu + H2_{mu-1}), with H2_{-1} = -H2_1;
    then omega Phi_{n+1} = (n+b-a-alpha*omega) Phi_n + alpha (b+n-1) Phi_{n-1}
    with a = 1/2+mu, b = 1/2-mu, omega = i tau.
    """
    if tau <= 0.0:
        raise DomainError(f"requires tau > 0, got {tau}")
    if K > MAX_ORDER:
        raise DomainError(f"order limited to {MAX_ORDER}, got {K}")
    alpha = geometry.alpha
    xi = 0.5 * alpha * tau
    # (tau/alpha)^mu in log space; extreme tau/alpha ratios would overflow
    fac = math.sqrt(math.pi) * math.exp(mu * (math.log(tau) - math.log(alpha)))
    eix = complex(math.cos(xi), math.sin(xi))
    h_mu = _hankel2_any(mu, xi)
    h_m1 = _hankel2_any(mu - 1, xi)
    phis = [
        -0.5j * fac * eix * h_mu,
        0.25 * alpha * fac * eix * (1j * h_mu + h_m1),
    ]
    a = 0.5 + mu
    b = 0.5 - mu
    omega = geometry.omega
    for n in range(1, K):
        phis.append(
            ((n + b - a - alpha * omega) * phis[n] + alpha * (b + n - 1) * phis[n - 1])
            / omega
        )
    return PhiTable(phi=tuple(phis[: K + 1]), geometry=geometry, mu=mu)


def qtilde_kummer(mu, tau, x, K=DEFAULT_TERMS):
    """Q-tilde of order mu in {0, 1, 2} for x > 1, tau >= 5."""
    if mu not in (0, 1, 2):
        raise DomainError(f"order must be in {{0, 1, 2}}, got {mu}")
    if tau < TAU_FLOOR:
        raise DomainError(f"expansion valid only for tau >= {TAU_FLOOR}, got {tau}")
    geom = kummer_geometry(mu, tau, x)
    phis = phi_table(mu, tau, geom, K).phi
    f = f_coefficients(mu, geom, K).coeffs
    total = sum(fk * pk for fk, pk in zip(f, phis))
    t = (x - 1.0) * (x + 1.0)
    s = math.sqrt(t)
    pref = math.sqrt(math.pi / 2.0) * geom.alpha ** (mu + 0.5) * t ** -0.25
    value = (pref * phase_factor(tau, x + s) * total).real
    return Evaluation(
        value=value,
        method=LARGE_TAU_KUMMER,
        terms_used=K + 1,
        error_estimate=abs(f[K] * phis[K]) / abs(total),
    )
