import random
from fractions import Fraction
from math import gcd

from padicasai.characters import (
    DirichletCharacter,
    QuadCharacter,
    char_eval,
    distinguished_compatible,
    eta_eval,
    is_fundamental_discriminant,
    kronecker,
    unit_group,
)
from padicasai.numberfield import cyclotomic_field


def test_kronecker_against_quadratic_residues():
    # for odd prime n, (a|n) is the Legendre symbol
    for n in (3, 5, 7, 11, 13):
        squares = {pow(x, 2, n) for x in range(1, n)}
        for a in range(1, 2 * n):
            expected = 0 if a % n == 0 else (1 if a % n in squares else -1)
            assert kronecker(a, n) == expected


def test_trivial_character():
    chi = DirichletCharacter.trivial(12)
    for a in range(1, 12):
        if gcd(a, 12) == 1:
            assert char_eval(chi, a) == 1
        else:
            assert char_eval(chi, a).is_zero()


def test_mod4_character():
    chi = DirichletCharacter(4, [1])
    assert chi.order == 2
    assert char_eval(chi, 3) == -1
    assert char_eval(chi, 1) == 1
    assert char_eval(chi, 2).is_zero()
    assert chi.parity() == -1


def test_order4_mod5():
    chi = DirichletCharacter(5, [1])
    assert chi.order == 4
    v = char_eval(chi, 2)
    K = cyclotomic_field(4)
    assert v == K.gen or v == -K.gen  # primitive 4th root of unity
    assert (v * v) == -1
    assert char_eval(chi ** 2, 2) == -1


def test_multiplicativity_randomized():
    rng = random.Random(301)
    for M in (5, 8, 12, 15, 40):
        comps = unit_group(M)
        chi = DirichletCharacter(M, [rng.randrange(s) for _, s in comps])
        for _ in range(25):
            a, b = rng.randrange(1, 3 * M), rng.randrange(1, 3 * M)
            lhs = chi.value_exponent(a * b)
            if gcd(a * b, M) != 1:
                assert lhs is None
            else:
                assert lhs == (chi.value_exponent(a) + chi.value_exponent(b)) % 1


def test_eta_examples():
    eta = QuadCharacter(5)
    assert eta_eval(eta, 5) == 0
    assert eta_eval(eta, 2) == -1
    assert eta_eval(eta, 11) == 1


def _splitting_oracle(D, l):
    # factor the minimal polynomial of the ring of integers mod l
    if D % 4 == 1:
        c0, c1 = -(D - 1) // 4, -1  # x^2 - x - (D-1)/4
    else:
        c0, c1 = -D // 4, 0  # x^2 - D/4
    roots = sum(1 for x in range(l) if (x * x + c1 * x + c0) % l == 0)
    if l == 2 and D % 4 == 0:
        return 0
    if roots == 2:
        return 1
    if roots == 0:
        return -1
    # single root: ramified iff the root is a double root (disc = 0 mod l)
    disc = (c1 * c1 - 4 * c0) % l
    return 0 if disc == 0 else 1


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            for j in range(i * i, n + 1, i):
                sieve[j] = False
    return [i for i, f in enumerate(sieve) if f]


def test_eta_vs_splitting_oracle():
    for D in (5, 8, 13, 12):
        eta = QuadCharacter(D)
        for l in primes_upto(500):
            assert eta(l) == _splitting_oracle(D, l), (D, l)


def test_eta_periodicity():
    for D in (5, 8, 17):
        eta = QuadCharacter(D)
        for l in primes_upto(300):
            if D % l == 0:
                continue
            for m in primes_upto(300):
                if m % D == l % D and D % m != 0:
                    assert eta(l) == eta(m)


def test_eta_as_dirichlet_matches():
    for D in (5, 8, 12, 13):
        eta = QuadCharacter(D)
        chi = eta.as_dirichlet()
        assert chi.order in (1, 2)
        for a in range(1, 3 * D):
            if gcd(a, D) == 1:
                assert char_eval(chi, a).as_rational() == eta(a)
            else:
                assert eta(a) == 0


def test_fundamental_discriminants():
    assert is_fundamental_discriminant(5)
    assert is_fundamental_discriminant(8)
    assert is_fundamental_discriminant(12)
    assert not is_fundamental_discriminant(4)
    assert not is_fundamental_discriminant(9)
    try:
        QuadCharacter(9)
        assert False
    except ValueError:
        pass


def test_distinguished_compatible():
    triv = DirichletCharacter.trivial(1)
    assert distinguished_compatible(triv, triv)
    quad = DirichletCharacter(4, [1])
    assert distinguished_compatible(quad, DirichletCharacter.trivial(4))
    chi4 = DirichletCharacter(5, [1])  # order 4
    assert not distinguished_compatible(chi4, DirichletCharacter.trivial(5))
    # chi^2 * omega = 1 with omega = (chi^2)^(-1)
    omega = (chi4 ** 2).inverse()
    assert distinguished_compatible(chi4, omega)


def test_conductor():
    # imprimitive trivial character mod 12 has conductor 1
    assert DirichletCharacter.trivial(12).conductor() == 1
    # the mod-4 character lifted to mod 12
    chi4 = DirichletCharacter(4, [1])
    chi12 = chi4 * DirichletCharacter.trivial(3)
    assert chi12.modulus == 12 and chi12.conductor() == 4
    assert QuadCharacter(8).as_dirichlet().conductor() == 8
    assert DirichletCharacter(5, [2]).conductor() == 5


def test_serialization_roundtrip():
    chi = DirichletCharacter(40, [1, 1, 2])
    d = chi.to_dict()
    assert DirichletCharacter.from_dict(d) == chi
