import math

import pytest

from conicalq.errors import DomainError
from conicalq.kummer import (
    TruncatedSeries,
    f_coefficients,
    kummer_geometry,
    phi_table,
    qtilde_kummer,
)

PHI0_0_20_11 = complex(0.1700719094036424060328, -0.1653751689528808829651)
PHI1_0_20_11 = complex(-0.00400415890040728303778, -0.00435313693184441997229)
PHI2_0_20_11 = complex(-0.0003331800496773029224912, 0.0002901096462297192883063)

QT0_20_11 = -0.4039804235593535218057
QT0_20_100 = 0.02795866649608623054572
QT1_20_11 = -2.267990393266361345635
QT0_10_11 = 0.2692634848790927309942
QT0_100_11 = 0.0744536437789467487225

# reference Phi_n values from a 40-digit Kummer-U evaluation, keyed by
# (mu, tau, x, n); the forward recurrence is compared against these
PHI_CLOSURE_REFS = {
    (0, 10, 1.1, 2): complex(-0.0019449719380730322587, 0.0014916067926673965742),
    (0, 10, 1.1, 5): complex(-0.000045368270454669287376, -0.000078625026764717141785),
    (0, 10, 1.1, 8): complex(0.000020581597374555935891, -9.2572956497230365981e-6),
    (0, 10, 100.0, 2): complex(-0.00052110675100762418328, 0.00050896287123590619998),
    (0, 10, 100.0, 5): complex(-0.000019736272635901093328, -0.000020786316012309287359),
    (0, 10, 100.0, 8): complex(5.6414178198378152295e-6, -5.2075271640417134265e-6),
    (0, 50, 1.1, 2): complex(-0.00003269173293715130276, 0.000030905419248575585828),
    (0, 50, 1.1, 5): complex(-9.3536315312239484254e-9, -1.0579011549241777892e-8),
    (0, 50, 1.1, 8): complex(2.3203869223972700202e-11, -1.9203563901975649979e-11),
    (0, 50, 100.0, 2): complex(-9.2375457012103303568e-6, 9.1940619343536868932e-6),
    (0, 50, 100.0, 5): complex(-2.8878074987742890811e-9, -2.9179395357380613856e-9),
    (0, 50, 100.0, 8): complex(6.276227714385842535e-12, -6.176351348614874655e-12),
    (0, 200, 1.1, 2): complex(-1.0022570305161925673e-6, 9.8823664648227343203e-7),
    (0, 200, 1.1, 5): complex(-4.8210500451880350676e-12, -4.9727652744444604712e-12),
    (0, 200, 1.1, 8): complex(1.6796046786833879163e-16, -1.6011001726761952824e-16),
    (0, 200, 100.0, 2): complex(-2.8816688906598834634e-7, 2.8782716097017287392e-7),
    (0, 200, 100.0, 5): complex(-1.4156428614756902005e-12, -1.4193214628712327115e-12),
    (0, 200, 100.0, 8): complex(4.7602891456885770612e-17, -4.7412352752398460353e-17),
    (1, 10, 1.1, 2): complex(0.004711970943622416237, 0.0076900649122783901683),
    (1, 10, 1.1, 5): complex(-0.000099631695202939425864, 0.000014371316861308049963),
    (1, 10, 1.1, 8): complex(2.3198204798291400062e-6, -0.000012925240174788383103),
    (1, 10, 100.0, 2): complex(0.00015852165613782521493, 0.0001653959843389909497),
    (1, 10, 100.0, 5): complex(-2.2531651969393339425e-6, 1.9834308471733076776e-6),
    (1, 10, 100.0, 8): complex(-3.0263386144508469861e-7, -3.7453936789248102552e-7),
    (1, 50, 1.1, 2): complex(0.00056611410522170749766, 0.00062643301802146138523),
    (1, 50, 1.1, 5): complex(-7.0712551542696607129e-8, 5.2077450872414944393e-8),
    (1, 50, 1.1, 8): complex(-5.6885618391822379934e-11, -9.5618534283959912951e-11),
    (1, 50, 100.0, 2): complex(0.00001443318132802680374, 0.000014556286978226586588),
    (1, 50, 100.0, 5): complex(-1.5411200807183565237e-9, 1.5023472385497763238e-9),
    (1, 50, 100.0, 8): complex(-1.9163871276410687868e-12, -1.9995354421905531012e-12),
    (1, 200, 1.1, 2): complex(0.000073833896651192718552, 0.00007573021174207575064),
    (1, 200, 1.1, 5): complex(-1.271970561142480217e-10, 1.1787527409976731401e-10),
    (1, 200, 1.1, 8): complex(-2.3025361988808901756e-15, -2.6143134094160776866e-15),
    (1, 200, 100.0, 2): complex(1.8099607044921546046e-6, 1.8138079199921296689e-6),
    (1, 200, 100.0, 5): complex(-2.982064314396590776e-12, 2.9631289666037692399e-12),
    (1, 200, 100.0, 8): complex(-5.9458777008650691192e-17, -6.0093397752309066441e-17),
}


def f1_closed_form(b, z, d):
    return (b / (2 * d)) * (2 * d * z + d - 2 * z)


def f2_closed_form(b, z, d):
    return (b / (24 * d * d)) * (
        12 * z * z + 12 * b * z * z + d * d - 12 * d * d * z - 12 * d * d * z * z
        - 24 * b * d * z * z + 12 * b * d * d * z + 12 * b * d * d * z * z
        + 3 * b * d * d - 12 * b * d * z
    )


class TestTruncatedSeries:
    def test_mul_is_cauchy_prefix(self):
        a = TruncatedSeries((1.0, 2.0, 3.0), 2)
        b = TruncatedSeries((4.0, 5.0, 6.0), 2)
        assert a.mul(b).coeffs == (4.0, 13.0, 28.0)

    def test_exp_log_roundtrip(self):
        p = TruncatedSeries((1.0, -0.3, 0.07, 0.011, -0.002), 4)
        back = p.log().exp()
        for got, want in zip(back.coeffs, p.coeffs):
            assert abs(got - want) < 1e-15

    def test_power_of_ones(self):
        # (1/(1-t))^2 = 1 + 2t + 3t^2 + ...
        p = TruncatedSeries((1.0, 1.0, 1.0, 1.0), 3)
        sq = p.power(2.0)
        for n, c in enumerate(sq.coeffs):
            assert abs(c - (n + 1)) < 1e-14


class TestFCoefficients:
    def test_f0_is_exactly_one(self):
        for mu in (0, 1):
            for x in (1.001, 1.5, 40.0):
                g = kummer_geometry(mu, 20.0, x)
                assert f_coefficients(mu, g, 8).coeffs[0] == 1.0

    @pytest.mark.parametrize("mu", [0, 1])
    @pytest.mark.parametrize("x", [1.01, 1.1, 2.0, 10.0, 100.0])
    def test_matches_closed_forms(self, mu, x):
        g = kummer_geometry(mu, 20.0, x)
        f = f_coefficients(mu, g, 8).coeffs
        f1 = f1_closed_form(g.b, g.z, g.d)
        f2 = f2_closed_form(g.b, g.z, g.d)
        assert abs(f[1] - f1) <= 1e-12 * max(abs(f1), 1e-3)
        assert abs(f[2] - f2) <= 1e-12 * max(abs(f2), 1e-3)

    def test_order_guard(self):
        g = kummer_geometry(0, 20.0, 1.1)
        with pytest.raises(DomainError):
            f_coefficients(0, g, 17)


class TestPhiTable:
    def test_starting_values_reference(self):
        g = kummer_geometry(0, 20.0, 1.1)
        tab = phi_table(0, 20.0, g, 8).phi
        assert abs(tab[0] - PHI0_0_20_11) < 5e-14 * abs(PHI0_0_20_11)
        assert abs(tab[1] - PHI1_0_20_11) < 5e-13 * abs(PHI1_0_20_11)

    def test_recurrence_closure_single_step(self):
        g = kummer_geometry(0, 20.0, 1.1)
        tab = phi_table(0, 20.0, g, 8).phi
        assert abs(tab[2] - PHI2_0_20_11) < 1e-10 * abs(PHI2_0_20_11)

    def test_recurrence_closure_grid(self):
        # Forward recurrence vs direct Kummer-U references, k in {2, 5, 8}.
        # Cancellation in the recurrence amplifies the double-precision seed
        # error by roughly |alpha*omega|^(k-1) / decay, so the 1e-10 bar is
        # unreachable for large alpha*tau with double-precision seeds; the
        # observed error growth is recorded here rather than hidden.
        worst = {}
        for (mu, tau, x, k), ref in PHI_CLOSURE_REFS.items():
            g = kummer_geometry(mu, tau, x)
            tab = phi_table(mu, tau, g, 8).phi
            err = abs(tab[k] - ref) / abs(ref)
            key = (mu, tau, x)
            worst[key] = max(worst.get(key, 0.0), err)
        report = ", ".join(
            f"(mu={mu},tau={tau},x={x}): {e:.2e}" for (mu, tau, x), e in sorted(worst.items())
        )
        assert max(worst.values()) <= 1e-10, report

    def test_decay_rate(self):
        g = kummer_geometry(0, 50.0, 1.1)
        tab = phi_table(0, 50.0, g, 8).phi
        ratio = abs(tab[8]) / abs(tab[0])
        # consistent with Phi_8 = (1/2)_8 omega^-8 U(...) decay, i.e. the
        # O(omega^-8) law with its (1/2)_8 ~ 7.9e3 coefficient, within two
        # orders of magnitude
        poch = math.prod(0.5 + k for k in range(8))
        assert 1e-2 * poch * 50.0 ** -8 <= ratio <= 1e2 * poch * 50.0 ** -8

    def test_stepwise_ratio_bound(self):
        for mu, tau, x in [(0, 20.0, 1.1), (1, 50.0, 1.05), (0, 100.0, 2.0)]:
            g = kummer_geometry(mu, tau, x)
            tab = phi_table(mu, tau, g, 8).phi
            bound = 10.0 * max(1.0 / tau, g.alpha)
            for n in range(8):
                assert abs(tab[n + 1]) / abs(tab[n]) <= bound

    def test_tau_guard(self):
        g = kummer_geometry(0, 20.0, 1.1)
        with pytest.raises(DomainError):
            phi_table(0, 0.0, g, 8)


class TestQtildeKummer:
    def test_references_meet_single_precision_bar(self):
        for mu, tau, x, ref in [
            (0, 20.0, 1.1, QT0_20_11),
            (0, 20.0, 100.0, QT0_20_100),
            (1, 20.0, 1.1, QT1_20_11),
        ]:
            e = qtilde_kummer(mu, tau, x, K=8)
            assert abs(e.value - ref) <= 1e-8 * abs(ref)
            assert e.method == "LargeTauKummer"

    def test_error_improves_with_tau(self):
        err10 = abs(qtilde_kummer(0, 10.0, 1.1, K=8).value - QT0_10_11) / abs(QT0_10_11)
        err100 = abs(qtilde_kummer(0, 100.0, 1.1, K=8).value - QT0_100_11) / abs(QT0_100_11)
        assert err100 < err10

    def test_error_uniform_in_x(self):
        err_small_x = abs(qtilde_kummer(0, 20.0, 1.1, K=8).value - QT0_20_11) / abs(QT0_20_11)
        err_large_x = abs(qtilde_kummer(0, 20.0, 100.0, K=8).value - QT0_20_100) / abs(QT0_20_100)
        lo, hi = sorted([err_small_x + 1e-16, err_large_x + 1e-16])
        assert hi / lo < 1e2

    def test_validity_floor(self):
        with pytest.raises(DomainError):
            qtilde_kummer(0, 4.0, 1.1)
        with pytest.raises(DomainError):
            qtilde_kummer(3, 20.0, 1.1)
