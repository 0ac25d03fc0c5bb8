"""Minimal double-double helpers for phase-critical products.

The oscillatory prefactor exp(-i*tau*ln(x+sqrt(x^2-1))) needs its argument
reduced mod 2*pi without the ~tau*ln(w)*eps error a plain double product
carries (up to ~1e-13 rad at tau=200, x=500, which is the dominant error of
the whole evaluation there).  A handful of error-free transformations is
enough to make the reduced phase accurate to ~1 ulp.
"""

import math

_SPLITTER = 134217729.0  # 2^27 + 1

LN2_HI = 0.6931471805599453
LN2_LO = 2.3190468138462996e-17
TWO_PI_HI = 6.283185307179586
TWO_PI_LO = 2.4492935982947064e-16


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(a, b):
    s, e = two_sum(a[0], b[0])
    e += a[1] + b[1]
    return quick_two_sum(s, e)


def dd_mul(a, b):
    p, e = two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p, e)


def dd_mul_d(a, b):
    p, e = two_prod(a[0], b)
    e += a[1] * b
    return quick_two_sum(p, e)


def dd_div_d(a, b):
    q = a[0] / b
    p, e = two_prod(q, b)
    r = ((a[0] - p) - e + a[1]) / b
    return quick_two_sum(q, r)


def dd_exp(a):
    """exp of a double-double, for |a| up to a few tens."""
    k = round(a[0] / LN2_HI)
    r = dd_add(a, dd_mul_d((LN2_HI, LN2_LO), float(-k)))
    s = (1.0, 0.0)
    t = (1.0, 0.0)
    for n in range(1, 26):
        t = dd_div_d(dd_mul(t, r), float(n))
        s = dd_add(s, t)
        if abs(t[0]) < 1e-35:
            break
    return dd_mul_d(s, 2.0 ** k)


def dd_log(w):
    """ln(w) as a double-double, one residual-correction step on math.log."""
    hi = math.log(w)
    u = dd_exp((-hi, 0.0))
    v = dd_add(dd_mul_d(u, w), (-1.0, 0.0))  # w*e^-hi - 1, size ~eps*ln(w)
    d = dd_add(v, dd_mul_d(dd_mul(v, v), -0.5))  # log1p(v) to second order
    return dd_add((hi, 0.0), d)


def phase_factor(tau, w):
    """exp(-i*tau*ln(w)) with the phase reduced mod 2*pi in double-double."""
    p = dd_mul_d(dd_log(w), tau)
    n = round(p[0] / TWO_PI_HI)
    r = dd_add(p, dd_mul_d((TWO_PI_HI, TWO_PI_LO), float(-n)))
    phi = r[0] + r[1]
    return complex(math.cos(phi), -math.sin(phi))
