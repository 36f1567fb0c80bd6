from fractions import Fraction

from padicasai.padic import PadicInt, PadicNum
from padicasai.series import PowerSeries, series_invert


def frac_series(vals, order=None):
    return PowerSeries([Fraction(v) for v in vals], order)


def test_truncation_discipline():
    f = frac_series([1, 2, 3])
    g = frac_series([1, 1], 2)
    assert (f * g).order == 2
    assert (f + g).order == 2
    try:
        (f * g)[2]
        assert False
    except IndexError:
        pass


def test_invert_one():
    f = frac_series([1, 0, 0, 0])
    assert series_invert(f) == f


def test_invert_geometric():
    f = frac_series([1, -1, 0, 0, 0, 0])  # 1 - T
    inv = series_invert(f)
    assert inv.coeffs == [Fraction(1)] * 6


def test_invert_padic_multiply_back():
    p, n = 5, 8
    one = PadicInt(p, n, 1)
    f = PowerSeries([one, PadicInt(p, n, p)] + [PadicInt(p, n, 0)] * 6)
    inv = series_invert(f)
    prod = f * inv
    assert prod.coeffs[0] == 1
    for c in prod.coeffs[1:]:
        assert c == 0
    # alternating signs (-p)^k
    for k, c in enumerate(inv.coeffs):
        assert c == PadicInt(p, n, (-p) ** k)


def test_invert_requires_unit():
    f = frac_series([0, 1, 0])
    try:
        series_invert(f)
        assert False
    except ZeroDivisionError:
        pass


def test_eval_and_shift():
    f = frac_series([1, 2, 1])  # (1+T)^2
    assert f.eval(Fraction(3)) == 16
    assert f.shift(1).coeffs == [0, 1, 2]
    g = f.shift(1).divide_T(1)
    assert g.order == 2 and g.coeffs == [1, 2]
    assert f.valuation_T() == 0
    assert f.shift(2).valuation_T() == 2


def test_padicnum_coefficients():
    p, n = 5, 10
    half = PadicNum.from_fraction(p, n, Fraction(1, 5))
    f = PowerSeries([1 + half * 0, half, half * half])
    g = f * f
    assert g.coeffs[1] == 2 * half
