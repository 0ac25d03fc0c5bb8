"""High-precision fixture generation for Qt^m_{-1/2+i*tau}(x).

Two independent representations of the same function are implemented:

  hyp2f1  sqrt(pi/2) (x^2-1)^(-1/4) (x+s)^(-i tau)
          * Gamma(m+1/2+i tau)/Gamma(1+i tau)
          * 2F1(1/2+m, 1/2-m; 1+i tau; -z),   z = 1/(2 s (x+s))

  legenq  e^{-i pi m} * Q^m_{-1/2+i tau}(x)   (type-3 associated Legendre)

Both yield the full complex quantity whose real part is the published
reference value.  Orders m >= 2 are lifted from the m = 0, 1 seeds of the
chosen representation by the exact forward recurrence (stable direction for
this dominant solution), carried in the working precision.

Invoked as a script with a key-value spec file; runs the cross-representation
self-check before writing anything, and aborts publication on disagreement.
"""

import sys
from dataclasses import dataclass, field
from pathlib import Path

import mpmath as mp


@dataclass
class FixtureSpec:
    points: list                # (m, tau, x) with tau, x as decimal strings
    digits: int = 50
    representation: str = "hyp2f1"
    output: str = "fixtures.csv"
    max_amplification: float = None
    run_self_check: bool = True
    source: str = ""
    warnings: list = field(default_factory=list)


def parse_spec(path):
    spec = FixtureSpec(points=[], source=str(path))
    seen = set()
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key == "digits":
            spec.digits = int(value)
        elif key == "representation":
            if value not in ("hyp2f1", "legenq"):
                raise ValueError(f"{path}:{lineno}: unknown representation {value!r}")
            spec.representation = value
        elif key == "output":
            spec.output = value
        elif key == "max_amplification":
            spec.max_amplification = float(value)
        elif key == "self_check":
            spec.run_self_check = value.lower() in ("1", "true", "yes")
        elif key == "point":
            m_s, tau_s, x_s = value.split()
            point = (int(m_s), tau_s, x_s)
            if point in seen:
                spec.warnings.append(f"duplicate point {value!r} dropped")
                continue
            seen.add(point)
            spec.points.append(point)
        else:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    if spec.digits < 30:
        raise ValueError("digits must be >= 30")
    if not spec.points:
        raise ValueError("spec contains no points")
    for m, tau_s, x_s in spec.points:
        if m < 0 or mp.mpf(tau_s) < 0 or mp.mpf(x_s) <= 1:
            raise ValueError(f"illegal point ({m}, {tau_s}, {x_s}): need m>=0, tau>=0, x>1")
    spec.points.sort(key=lambda p: (p[0], mp.mpf(p[1]), mp.mpf(p[2])))
    return spec


def _qhat_hyp2f1(m, tau, x):
    s = mp.sqrt((x - 1) * (x + 1))
    z = 1 / (2 * s * (x + s))
    c = mp.mpf(1) + mp.mpc(0, 1) * tau
    pref = (mp.sqrt(mp.pi / 2) * (x * x - 1) ** mp.mpf("-0.25")
            * mp.power(x + s, -mp.mpc(0, 1) * tau)
            * mp.gamma(m + mp.mpf("0.5") + mp.mpc(0, 1) * tau) / mp.gamma(c))
    return pref * mp.hyp2f1(mp.mpf("0.5") + m, mp.mpf("0.5") - m, c, -z)


def _qhat_legenq(m, tau, x):
    nu = mp.mpc(mp.mpf("-0.5"), tau)
    return mp.expjpi(-m) * mp.legenq(nu, m, x, type=3)


def _qhat(m, tau, x, representation):
    seed = _qhat_hyp2f1 if representation == "hyp2f1" else _qhat_legenq
    if m <= 1:
        return seed(m, tau, x)
    q_lo, q_hi = seed(0, tau, x), seed(1, tau, x)
    coef = 2 * x / mp.sqrt((x - 1) * (x + 1))
    for k in range(1, m):
        q_lo, q_hi = q_hi, coef * k * q_hi - ((k - mp.mpf("0.5")) ** 2 + tau * tau) * q_lo
    return q_hi


def _evaluate(point, digits, representation):
    # Coordinates are interpreted as their nearest double-precision values:
    # the consumer evaluates at doubles, and near x = 1 the function is
    # sensitive enough (~1e7 slope) that the decimal/binary gap would
    # otherwise dominate the comparison.
    m, tau_s, x_s = point
    with mp.workdps(digits + 20):
        q = _qhat(m, mp.mpf(float(tau_s)), mp.mpf(float(x_s)), representation)
        value = q.real
        amp = mp.inf if value == 0 else abs(q) / abs(value)
    return value, amp


def self_check(spec):
    """Evaluate every point through both representations; report worst gap.

    Returns (ok, report_lines); agreement threshold is 10^-(digits-15).
    """
    threshold = mp.mpf(10) ** (-(spec.digits - 15))
    worst = (None, mp.mpf(0))
    lines = []
    for point in spec.points:
        va, _ = _evaluate(point, spec.digits, "hyp2f1")
        vb, _ = _evaluate(point, spec.digits, "legenq")
        rel = abs(va - vb) / abs(vb) if vb != 0 else abs(va)
        lines.append(f"m={point[0]} tau={point[1]} x={point[2]} disagreement={mp.nstr(rel, 3)}")
        if rel > worst[1]:
            worst = (point, rel)
    lines.append(f"worst disagreement: {worst[0]} at {mp.nstr(worst[1], 3)} "
                 f"(threshold {mp.nstr(threshold, 3)})")
    return worst[1] <= threshold, lines


def generate(spec):
    """Write the fixture CSV for the spec; returns the output path."""
    out_path = Path(spec.source).parent / spec.output if spec.source else Path(spec.output)
    rows = []
    skipped = []
    for point in spec.points:
        value, amp = _evaluate(point, spec.digits, spec.representation)
        if spec.max_amplification is not None and amp > spec.max_amplification:
            skipped.append(f"skipped m={point[0]} tau={point[1]} x={point[2]}: "
                           f"amplification {mp.nstr(amp, 3)} exceeds "
                           f"{spec.max_amplification:g}")
            continue
        rows.append((point, mp.nstr(value, 32)))
    if not rows:
        raise RuntimeError("every point was filtered out; nothing to publish")
    lines = [
        "# conicalq reference fixtures",
        f"# digits: {spec.digits}",
        f"# representation: {spec.representation}",
        f"# mpmath: {mp.__version__}",
    ]
    if spec.max_amplification is not None:
        lines.append(f"# max_amplification: {spec.max_amplification:g}")
    lines.append("m,tau,x,qtilde_ref")
    for (m, tau_s, x_s), ref in rows:
        lines.append(f"{m},{tau_s},{x_s},{ref}")
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n")
    return out_path, skipped


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1:
        print("usage: conicalq-oracle SPEC_FILE", file=sys.stderr)
        return 2
    try:
        spec = parse_spec(argv[0])
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for warning in spec.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if spec.run_self_check:
        ok, lines = self_check(spec)
        for line in lines:
            print(line)
        if not ok:
            print("self-check failed; fixtures not published", file=sys.stderr)
            return 1
    out_path, skipped = generate(spec)
    for line in skipped:
        print(f"warning: {line}", file=sys.stderr)
    print(f"wrote {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
