"""Real-argument Bessel functions J, Y and the Hankel combination H2 = J - iY.

Orders 0 and 1 only; higher orders needed by the Kummer-expansion starting
values are built there by the standard recurrence.
"""

import math
from dataclasses import dataclass

from scipy.special import j0, j1, y0, y1

from .errors import DomainError


@dataclass(frozen=True)
class BesselPair:
    j: float
    y: float
    order: int
    arg: float


def bessel_jy(order, x):
    """J_order(x) and Y_order(x) for order in {0, 1}, x > 0."""
    if order not in (0, 1):
        raise DomainError(f"order must be 0 or 1, got {order}")
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"argument must be positive and finite, got {x}")
    if order == 0:
        return BesselPair(j=float(j0(x)), y=float(y0(x)), order=0, arg=x)
    return BesselPair(j=float(j1(x)), y=float(y1(x)), order=1, arg=x)


def hankel2(order, x):
    """H^(2)_order(x) = J_order(x) - i Y_order(x)."""
    pair = bessel_jy(order, x)
    return complex(pair.j, -pair.y)


def cross_wronskian(pair0, pair1):
    """J_mu Y_{mu+1} - J_{mu+1} Y_mu for two pairs of consecutive order.

    Equals -2/(pi x); exposed so tests can assert the identity on real output.
    """
    if pair1.order != pair0.order + 1 or pair1.arg != pair0.arg:
        raise DomainError("pairs must share the argument and have consecutive orders")
    return pair0.j * pair1.y - pair1.j * pair0.y
