import random
from fractions import Fraction

from padicasai.padic import (
    NotOrdinary,
    PadicInt,
    PadicNum,
    hensel_cofactor,
    hensel_unit_root,
    plog,
    teichmuller,
    vp_fraction,
)


def test_precision_rules():
    p = 5
    a = PadicInt(p, 6, 7)
    b = PadicInt(p, 4, 3)
    assert (a + b).n == 4
    assert (a - b).n == 4
    # product of two units keeps min precision
    assert (a * b).n == 4
    # visible factors of p in both operands buy digits of the product
    c = PadicInt(p, 4, 25)  # valuation 2
    d = PadicInt(p, 4, 5)   # valuation 1
    assert (c * d).n == 4 + min(2 + 4, 1 + 4, 4) - 4 + 1  # = min(n1+v2, n2+v1)
    assert (c * d).n == 5
    assert (c * d).valuation() == 3
    # but a unit times a low-precision operand stays at the low precision
    assert (a * c).n == 4
    assert (a * c).valuation() == 2


def test_division_and_inverse():
    p = 7
    a = PadicInt(p, 8, 3)
    assert (a * a.inverse()) == 1
    b = PadicInt(p, 8, 7 * 5)
    q = b / a
    assert q * a == b
    try:
        a / PadicInt(p, 8, 0)
        assert False
    except ZeroDivisionError:
        pass


def test_from_fraction_roundtrip():
    x = PadicInt.from_fraction(5, 10, Fraction(-31, 30) * 30)  # integer -31
    assert x == -31
    y = PadicNum.from_fraction(5, 10, Fraction(-31, 30))
    assert y.valuation() == -1
    assert y * 30 == PadicNum.from_fraction(5, 10, -31)
    assert vp_fraction(Fraction(-31, 30), 5) == -1


def test_padicnum_arithmetic():
    p = 5
    one_minus = PadicNum.from_fraction(p, 10, Fraction(p - 1, p))  # 1 - 1/p
    direct = 1 - PadicNum.from_fraction(p, 10, Fraction(1, p))
    assert one_minus == direct
    assert one_minus.valuation() == -1
    prod = one_minus * PadicNum.from_fraction(p, 10, p)
    assert prod.valuation() == 0
    assert prod.to_padic_int() == 4


def test_hensel_idempotent_and_exact_factor():
    # X^2 - X = X(X-1): unit root 1
    r = hensel_unit_root(1, 0, 5, 8)
    assert r == 1
    # X^2 - 6X + 5 = (X-1)(X-5) at p=5: unit root 1, cofactor 5
    a, b = hensel_cofactor(6, 5, 5, 8)
    assert a == 1
    assert b == 5


def test_hensel_vs_exhaustive_search():
    # oracle: exhaustive root search mod 5^6 for X^2 - 6X + 35
    p, n = 5, 6
    mod = p ** n
    roots = [x for x in range(mod) if (x * x - 6 * x + 35) % mod == 0]
    unit_roots = [x for x in roots if x % p != 0]
    assert len(unit_roots) == 1
    alpha = hensel_unit_root(6, 35, p, n)
    assert alpha.value == unit_roots[0]


def test_hensel_not_ordinary():
    try:
        hensel_unit_root(5, 5, 5, 6)
        assert False
    except NotOrdinary:
        pass


def test_hensel_defining_identities_randomized():
    rng = random.Random(11)
    for _ in range(40):
        p = rng.choice([5, 7, 11])
        n = rng.randint(3, 12)
        a = rng.randrange(1, p ** n)
        if a % p == 0:
            a += 1
        b = p * rng.randrange(0, p ** (n - 1))
        alpha, beta = hensel_cofactor(a, b, p, n)
        assert alpha.value * (alpha.value - a) % p ** n == (-b) % p ** n
        assert alpha * beta == b
        assert beta.valuation() == PadicInt(p, n, b).valuation()


def test_teichmuller():
    for p in (5, 7):
        for u in range(1, p):
            t = teichmuller(u, p, 10)
            assert t.value % p == u
            assert pow(t.value, p - 1, p ** 10) == 1


def test_plog():
    p, n = 5, 10
    # log((1+p)^k) = k*log(1+p)
    lg = plog(PadicInt(p, n, 1 + p))
    assert lg.valuation() == 1
    x = PadicInt(p, n, pow(1 + p, 7, p ** n))
    assert plog(x) == 7 * lg
    # log is a homomorphism on 1 + pZp
    a = PadicInt(p, n, 1 + 3 * p + p ** 2)
    b = PadicInt(p, n, 1 + 4 * p)
    assert plog(a * b) == plog(a) + plog(b)
