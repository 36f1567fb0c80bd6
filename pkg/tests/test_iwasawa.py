import random
from fractions import Fraction

import pytest

from padicasai.iwasawa import (
    BranchMismatch,
    IwasawaElem,
    IwasawaFraction,
    PoleError,
    WeightChar,
    ell_log,
    ell_series,
    kubota_leopoldt,
    kummer_check,
    residue_at_trivial,
)
from padicasai.numberfield import bernoulli
from padicasai.padic import PadicInt, PadicNum
from padicasai.series import PowerSeries, series_invert


def kl_value(p, k):
    """Interpolation target -(1 - p^(k-1)) B_k / k, computed from exact
    Bernoulli numbers (the test-side oracle)."""
    return -(1 - Fraction(p) ** (k - 1)) * bernoulli(k) / k


def test_eval_constant_and_T():
    p, n = 5, 10
    c = IwasawaElem.constant(p, 2, Fraction(7), n, 6)
    assert c.eval_weight(2) == 7
    assert c.eval_weight(2 + (p - 1)) == 7
    f = IwasawaElem.from_coeffs(p, 2, [0, 1, 0, 0], n)  # the series T
    for k in (2, 6, 10):
        assert f.eval_weight(k) == pow(1 + p, k, p ** n) - 1
    with pytest.raises(BranchMismatch):
        f.eval_weight(3)


def test_fraction_pole_eval():
    p, n = 5, 10
    one = IwasawaElem.constant(p, 0, 1, n, 6)
    T = IwasawaElem.from_coeffs(p, 0, [0, 1, 0, 0, 0, 0], n)
    f = IwasawaFraction(one, T)  # 1/T
    assert f.pole_order == 1
    with pytest.raises(PoleError):
        f.eval_weight(0)
    assert f.eval_weight(p - 1) * (pow(1 + p, p - 1, p ** n) - 1) == 1


def test_ell_log_values():
    p, n = 5, 10
    assert ell_log(WeightChar(k=0), p, n) == 0
    assert ell_log(WeightChar(k=5), p, n) == 5
    # as a function of the T-value alone
    w = WeightChar(branch=3, t_value=pow(1 + p, 7, p ** n) - 1)
    assert ell_log(w, p, n) == 7


def test_ell_series_evaluates_to_k():
    p, n, m = 5, 8, 12
    ell = ell_series(p, n, m)
    # truncation error at T_k is O(p^(m+1 - small)): compare at precision 8
    for k in (0, 4, 8):
        v = ell.eval_weight(WeightChar(branch=0, t_value=pow(1 + p, k, p ** (n + 2)) - 1))
        assert v == k, (k, v)
    # leading coefficient is 1/log(1+p): valuation -1
    assert ell.series.coeffs[1].valuation() == -1


def test_ell_series_times_inverse():
    p, n, m = 7, 8, 10
    ell = ell_series(p, n, m)
    g = ell.series.divide_T(1)
    prod = g * series_invert(g)
    assert prod.coeffs[0] == 1
    for c in prod.coeffs[1:]:
        assert c.mant.value == 0


@pytest.mark.parametrize("p,branch,k,expect", [
    (5, 0, 4, Fraction(-31, 30)),   # (1-5^3) zeta(-3) = -124/120
    (5, 2, 2, Fraction(1, 3)),      # -(1-5) B_2/2
])
def test_kl_stated_values(p, branch, k, expect):
    assert kl_value(p, k) == expect
    zp = kubota_leopoldt(p, branch, n=10, m=12)
    got = zp.eval_weight(k)
    assert got == PadicNum.from_fraction(p, 10, expect)


def test_kl_branch0_pole_order():
    zp = kubota_leopoldt(5, 0, n=10, m=12)
    assert isinstance(zp, IwasawaFraction)
    assert zp.pole_order == 1


def test_kl_out_of_sample_all_even_branches():
    for p in (5, 7):
        for branch in range(0, p - 1, 2):
            zp = kubota_leopoldt(p, branch, n=10, m=12)
            # construction used the first 12 admissible weights; test the next 10
            start = branch if branch != 0 else p - 1
            for j in range(12, 22):
                k = start + (p - 1) * j
                got = zp.eval_weight(k)
                want = PadicNum.from_fraction(p, 10, kl_value(p, k))
                assert got == want, (p, branch, k)


def test_kl_odd_branch_rejected():
    with pytest.raises(ValueError):
        kubota_leopoldt(5, 1)


def test_residue_regular_element_is_zero():
    p, n = 5, 10
    f = IwasawaElem.from_coeffs(p, 0, [3, 1, 4, 1], n)
    assert residue_at_trivial(f).mant.value == 0


def test_residue_of_inverse_ell():
    # residues are oriented against the zeta-side uniformizer -ell, so the
    # exact cancellation case 1/ell carries a minus sign
    p, n, m = 5, 9, 12
    ell = ell_series(p, n, m)
    one = IwasawaElem.constant(p, 0, 1, n, m)
    f = IwasawaFraction(one, ell)
    assert residue_at_trivial(f) == -1
    g = IwasawaFraction(IwasawaElem.constant(p, 0, -1, n, m), ell)
    assert residue_at_trivial(g) == 1


def test_residue_of_kl_is_one_minus_one_over_p():
    for p in (5, 7, 11):
        zp = kubota_leopoldt(p, 0, n=10, m=12)
        r = residue_at_trivial(zp)
        assert r == PadicNum.from_fraction(p, 10, Fraction(p - 1, p)), p


def test_kummer_congruences():
    assert kummer_check(5, 2, 22)       # a = 1: congruence mod 25
    assert kummer_check(7, 2, 14)       # 14 = 2 mod 6, a = 0 -> mod 7
    assert kummer_check(5, 6, 6)
    assert kummer_check(7, 4, 4 + 6 * 49, a=2)
    with pytest.raises(ValueError):
        kummer_check(5, 4, 8)           # branch 0
    with pytest.raises(ValueError):
        kummer_check(5, 2, 6, a=1)      # not congruent mod 20


def test_eval_is_ring_homomorphism():
    rng = random.Random(23)
    p, n = 7, 8
    for _ in range(20):
        br = rng.choice([0, 2, 4])
        k = br + (p - 1) * rng.randint(0, 5)
        a = IwasawaElem.from_coeffs(p, br, [rng.randrange(p ** 4) for _ in range(6)], n)
        b = IwasawaElem.from_coeffs(p, br, [rng.randrange(p ** 4) for _ in range(6)], n)
        assert (a + b).eval_weight(k) == a.eval_weight(k) + b.eval_weight(k)
        prod_val = (a * b).eval_weight(k)
        # the product series is truncated at order 6; evaluation agrees to
        # the precision surviving T^6, i.e. at least p^6
        diff = prod_val - a.eval_weight(k) * b.eval_weight(k)
        assert diff.mant.value % p ** 6 == 0 or diff.valuation() >= 6
