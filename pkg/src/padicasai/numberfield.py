"""Exact rationals, Bernoulli numbers, and number fields presented by a
monic integer minimal polynomial.

Elements of ``Q[x]/(m(x))`` are stored as coordinate vectors of
:class:`fractions.Fraction` in the power basis.  Nothing here factors
polynomials or computes class groups; the fields are used as containers for
eigenvalue and cyclotomic arithmetic, so reduction mod the minimal
polynomial, inversion and complex embeddings are all that is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

Rational = Fraction


class FieldMismatch(ValueError):
    """Raised when combining elements of differently presented fields."""


@lru_cache(maxsize=None)
def _bernoulli_upto(kmax: int) -> tuple:
    # B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, with B_1 = -1/2.
    vals = [Fraction(1)]
    for m in range(1, kmax + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += comb(m + 1, j) * vals[j]
        vals.append(-acc / (m + 1))
    return tuple(vals)


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, convention B_1 = -1/2."""
    if k < 0:
        raise ValueError("Bernoulli index must be >= 0")
    return _bernoulli_upto(max(k, 2))[k]


def zeta_neg(k: int) -> Fraction:
    """zeta(1-k) = -B_k / k for an integer k >= 1."""
    if k < 1:
        raise ValueError("need k >= 1")
    return -bernoulli(k) / k


def poly_trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return poly_trim(out)


def _poly_divmod(a, b):
    """Quotient and remainder in Q[x]; b nonzero."""
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        d = len(a) - len(b)
        c = a[-1] / b[-1]
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        a = poly_trim(a)
    return poly_trim(q), a


def poly_divmod_exact(a, b):
    """Divide integer polynomials when the division is known to be exact."""
    a = [Fraction(c) for c in poly_trim(a)]
    b = poly_trim(b)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        d = len(a) - len(b)
        c = a[-1] / b[-1]
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        a = poly_trim(a)
    if a:
        raise ArithmeticError("division not exact")
    return poly_trim(q)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    # x^n - 1 divided by the product of Phi_d, d | n, d < n.
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = poly_divmod_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(int(c) for c in num)


class NumberField:
    """Q[x]/(m(x)) for a monic integer polynomial m, presented by its
    coefficient list (ascending, leading coefficient 1)."""

    def __init__(self, min_poly, name: str = "a"):
        mp = [int(c) for c in poly_trim(min_poly)]
        if len(mp) < 2 or mp[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        self.min_poly = tuple(mp)
        self.degree = len(mp) - 1
        self.name = name
        # x^degree in the power basis, used to fold down higher powers
        self._red = [-Fraction(c) for c in mp[:-1]]

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberField({list(self.min_poly)})"

    def __call__(self, coords) -> "NumberFieldElem":
        if isinstance(coords, NumberFieldElem):
            if coords.field == self:
                return coords
            coords = coords.as_rational()
        if isinstance(coords, (int, Fraction)):
            vec = [Fraction(coords)] + [Fraction(0)] * (self.degree - 1)
        else:
            vec = [Fraction(c) for c in coords]
            if len(vec) > self.degree:
                vec = self._reduce(vec)
            vec += [Fraction(0)] * (self.degree - len(vec))
        return NumberFieldElem(self, vec)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def gen(self):
        if self.degree == 1:
            return self(-self.min_poly[0])
        return self([0, 1])

    def _reduce(self, coeffs):
        c = [Fraction(x) for x in coeffs]
        while len(c) > self.degree:
            top = c.pop()
            if top:
                off = len(c) - self.degree
                for j, r in enumerate(self._red):
                    c[off + j] += top * r
        c += [Fraction(0)] * (self.degree - len(c))
        return c

    def embeddings(self):
        """Complex roots of the minimal polynomial, sorted by (Re, Im)."""
        if self.degree == 1:
            return [complex(-self.min_poly[0])]
        roots = np.roots(list(self.min_poly)[::-1])
        return sorted((complex(r) for r in roots), key=lambda z: (round(z.real, 9), round(z.imag, 9)))


#: the rational field, presented as Q[x]/(x)
QQ = NumberField([0, 1], name="one")


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> NumberField:
    """Field generated by a primitive n-th root of unity (n = 1, 2 give Q)."""
    return NumberField(list(cyclotomic_polynomial(n)), name=f"zeta{n}")


class NumberFieldElem:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, NumberFieldElem):
            if other.field == self.field:
                return other
            # allow mixing when one side is actually rational
            if other.is_rational():
                return self.field(other.as_rational())
            if self.is_rational():
                raise FieldMismatch("coerce the rational operand instead")
            raise FieldMismatch(
                f"field mismatch: {self.field.min_poly} vs {other.field.min_poly}")
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NumberFieldElem(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElem(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NumberFieldElem(self.field, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElem(self.field, [a * other for a in self.coords])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prod = poly_mul(list(self.coords), list(o.coords))
        return NumberFieldElem(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in number field")
        # gcd(self, min_poly) = 1 since min_poly is irreducible in all uses;
        # a nontrivial gcd would mean the presentation is not a field.
        r0 = [Fraction(c) for c in self.field.min_poly]
        r1 = poly_trim(list(self.coords))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, poly_mul(q, s1))
        if len(r0) != 1:
            raise ZeroDivisionError("element not invertible: presentation is not a field")
        inv = [c / r0[0] for c in s0]
        return NumberFieldElem(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return NumberFieldElem(self.field, [a / other for a in self.coords])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, NumberFieldElem):
            return NotImplemented
        if other.field != self.field:
            if self.is_rational() and other.is_rational():
                return self.as_rational() == other.as_rational()
            return False
        return self.coords == other.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash((self.field.min_poly, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def embed(self, root: complex) -> complex:
        acc = 0j
        for c in reversed(self.coords):
            acc = acc * root + complex(c)
        return acc

    def complex_abs_max(self) -> float:
        """Largest archimedean absolute value over all embeddings."""
        return max(abs(self.embed(r)) for r in self.field.embeddings())

    def __repr__(self):
        name = self.field.name
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*{name}")
            else:
                terms.append(f"{c}*{name}^{i}")
        return " + ".join(terms) if terms else "0"


def nf_arith(a: NumberFieldElem, b: NumberFieldElem, op: str) -> NumberFieldElem:
    """Dispatch helper: op in {'add', 'mul', 'inv'} (inv ignores b)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")
