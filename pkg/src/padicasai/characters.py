"""Dirichlet characters stored by exponents on fixed generators of the
unit group, with exact values in cyclotomic fields, plus the quadratic
character attached to a real quadratic field.

Generator convention (documented because serialized reports expose the
exponent vectors): factor M into prime powers in increasing prime order;
an odd prime power q = p^e contributes one generator, the smallest
primitive root mod p^e lifted to be 1 mod M/q; the 2-part contributes
nothing for 2, the class of -1 for 4, and the pair (-1, 5) for 2^e with
e >= 3.  chi(g_i) = exp(2 pi i c_i / s_i) where s_i is the order of g_i.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .numberfield import NumberFieldElem, cyclotomic_field


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a | n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v and a % 2 == 0:
        return 0
    # (a|2)^v
    result = 1
    if v % 2 == 1:
        r = a % 8
        if r in (3, 5):
            result = -1
    a %= n
    # Jacobi symbol (a|n) for odd n > 0 by reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _primitive_root(p: int, e: int) -> int:
    q = p ** e
    phi = (p - 1) * p ** (e - 1)
    fac = _prime_factors(phi)
    for g in range(2, q):
        if g % p == 0:
            continue
        if all(pow(g, phi // f, q) != 1 for f in fac):
            return g
    raise ArithmeticError("no primitive root found")


def _prime_factors(n: int):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _factorize(n: int):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def unit_group(M: int):
    """Components of (Z/M)^* as tuples (generator mod M, order)."""
    if M < 1:
        raise ValueError("modulus must be positive")
    comps = []
    for p, e in _factorize(M):
        q = p ** e
        cof = M // q
        def lift(x):
            # x mod q, 1 mod cofactor, via CRT
            if cof == 1:
                return x % M
            inv = pow(cof, -1, q)
            return (1 + cof * ((x - 1) * inv % q)) % M
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                comps.append((lift(3), 2))
            else:
                comps.append((lift(q - 1), 2))
                comps.append((lift(5), 2 ** (e - 2)))
        else:
            g = _primitive_root(p, e)
            comps.append((lift(g), (p - 1) * p ** (e - 1)))
    return tuple(comps)


@lru_cache(maxsize=None)
def _dlog_table(M: int):
    """a -> exponent vector over the components, for all units a mod M."""
    comps = unit_group(M)
    table = {1 % M: tuple(0 for _ in comps)}
    if M == 1:
        return {0: ()}
    # enumerate the group as products of generator powers
    from itertools import product
    for exps in product(*[range(s) for _, s in comps]):
        a = 1
        for (g, _), t in zip(comps, exps):
            a = a * pow(g, t, M) % M
        table[a] = exps
    return table


class DirichletCharacter:
    def __init__(self, modulus: int, exponents):
        self.modulus = modulus
        comps = unit_group(modulus)
        exps = [int(c) % s for c, (_, s) in zip(exponents, comps)]
        if len(exponents) != len(comps):
            raise ValueError(f"expected {len(comps)} exponents for modulus {modulus}")
        self.exponents = tuple(exps)
        n = 1
        for c, (_, s) in zip(self.exponents, comps):
            o = s // gcd(s, c) if c else 1
            n = n * o // gcd(n, o)
        self.order = n

    @classmethod
    def trivial(cls, modulus: int = 1):
        return cls(modulus, [0] * len(unit_group(modulus)))

    @classmethod
    def from_values_on_generators(cls, modulus: int, value_exponents):
        """value_exponents: Fractions r with chi(g_i) = e^(2 pi i r)."""
        comps = unit_group(modulus)
        exps = []
        for r, (_, s) in zip(value_exponents, comps):
            c = Fraction(r) * s
            if c.denominator != 1:
                raise ValueError("value is not an s_i-th root of unity")
            exps.append(int(c) % s)
        return cls(modulus, exps)

    def value_exponent(self, a: int):
        """chi(a) as a Fraction r mod 1 (chi(a) = e^(2 pi i r)), or None if
        gcd(a, M) > 1."""
        a = a % self.modulus if self.modulus > 1 else 0
        if self.modulus == 1:
            return Fraction(0)
        if gcd(a, self.modulus) != 1:
            return None
        exps = _dlog_table(self.modulus)[a]
        comps = unit_group(self.modulus)
        r = Fraction(0)
        for c, t, (_, s) in zip(self.exponents, exps, comps):
            r += Fraction(c * t, s)
        return r % 1

    def __call__(self, a: int) -> NumberFieldElem:
        return char_eval(self, a)

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.exponents)

    def conductor(self) -> int:
        """Smallest f | M such that chi factors through (Z/f)^*."""
        M = self.modulus
        for f in sorted(_divisors(M)):
            ok = True
            for a in range(1, M + 1):
                if a % f == 1 % f and gcd(a, M) == 1:
                    if self.value_exponent(a) != 0:
                        ok = False
                        break
            if ok:
                return f
        return M

    def primitive(self) -> "DirichletCharacter":
        """The primitive character inducing chi (modulus = conductor)."""
        f = self.conductor()
        if f == self.modulus:
            return self
        M = self.modulus
        comps = unit_group(f)
        vals = []
        for g, _ in comps:
            # lift g to a unit mod M congruent to g mod f
            a = g
            while gcd(a, M) != 1:
                a += f
            vals.append(self.value_exponent(a))
        return DirichletCharacter.from_values_on_generators(f, vals)

    def _on_common_modulus(self, other):
        M = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        comps = unit_group(M)
        vals1 = [self.value_exponent(g) for g, _ in comps]
        vals2 = [other.value_exponent(g) for g, _ in comps]
        return M, vals1, vals2

    def __mul__(self, other):
        M, v1, v2 = self._on_common_modulus(other)
        return DirichletCharacter.from_values_on_generators(M, [a + b for a, b in zip(v1, v2)])

    def __pow__(self, k: int):
        comps = unit_group(self.modulus)
        return DirichletCharacter(self.modulus, [c * k % s for c, (_, s) in zip(self.exponents, comps)])

    def inverse(self):
        return self ** -1

    def parity(self) -> int:
        """chi(-1) in {1, -1}."""
        r = self.value_exponent(-1)
        return 1 if r == 0 else -1

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def to_dict(self):
        return {"modulus": self.modulus, "exponents": list(self.exponents), "order": self.order}

    @classmethod
    def from_dict(cls, d):
        chi = cls(d["modulus"], d["exponents"])
        if "order" in d and d["order"] != chi.order:
            raise ValueError("inconsistent order in serialized character")
        return chi

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, exps {list(self.exponents)}, order {self.order})"


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def char_eval(chi: DirichletCharacter, a: int) -> NumberFieldElem:
    """Exact value of chi at a in the cyclotomic field of order chi.order."""
    K = cyclotomic_field(chi.order)
    r = chi.value_exponent(a)
    if r is None:
        return K.zero
    k = r * chi.order
    assert k.denominator == 1
    return K.gen ** (int(k) % chi.order) if chi.order > 1 else K.one


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _squarefree(n: int) -> bool:
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


class QuadCharacter:
    """Quadratic character of a real quadratic field of discriminant D > 0,
    given by the Kronecker symbol (D | .)."""

    def __init__(self, D: int):
        if D <= 0 or not is_fundamental_discriminant(D):
            raise ValueError("D must be a positive fundamental discriminant")
        self.D = D

    def __call__(self, n: int) -> int:
        return kronecker(self.D, n)

    def as_dirichlet(self) -> DirichletCharacter:
        comps = unit_group(self.D)
        vals = []
        for g, s in comps:
            v = kronecker(self.D, g)
            vals.append(Fraction(0) if v == 1 else Fraction(1, 2))
        return DirichletCharacter.from_values_on_generators(self.D, vals)

    def __repr__(self):
        return f"QuadCharacter(D={self.D})"


def eta_eval(eta: QuadCharacter, l: int) -> int:
    """Splitting type of the prime l: +1 split, -1 inert, 0 ramified."""
    return eta(l)


def distinguished_compatible(chi: DirichletCharacter, omega_restricted: DirichletCharacter) -> bool:
    """True iff chi^2 * omega_restricted is the trivial character (on the
    lcm modulus)."""
    prod = (chi * chi) * omega_restricted
    return prod.is_trivial()
