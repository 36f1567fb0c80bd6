"""p-adic integers with absolute precision tracking, and p-adic numbers
with a valuation shift.

A :class:`PadicInt` is a residue ``value mod p^n``; the exponent ``n`` is
the absolute precision and never silently increases.  Addition keeps the
minimum precision of the operands; multiplication follows the usual
valuation bookkeeping (a known factor of p in one operand buys a digit of
the product).  :class:`PadicNum` is the same thing scaled by an integer
power of p, so quantities like ``1 - 1/p`` stay exact objects.
"""

from __future__ import annotations

from fractions import Fraction


class NotOrdinary(ValueError):
    """Hecke polynomial has no unit root (v_p of the middle coefficient > 0)."""


class PrecisionError(ArithmeticError):
    pass


def vp(x: int, p: int) -> int:
    """p-adic valuation of a nonzero integer (raises on 0)."""
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def vp_fraction(x, p: int) -> int:
    x = Fraction(x)
    return vp(x.numerator, p) - vp(x.denominator, p)


class PadicInt:
    """value + O(p^n), 0 <= value < p^n."""

    __slots__ = ("p", "n", "value")

    def __init__(self, p: int, n: int, value: int):
        if n <= 0:
            raise ValueError("precision exponent must be positive")
        self.p = p
        self.n = n
        self.value = value % (p ** n)

    @classmethod
    def from_fraction(cls, p: int, n: int, x) -> "PadicInt":
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ValueError(f"{x} is not a p-adic integer at p={p}")
        mod = p ** n
        return cls(p, n, x.numerator * pow(x.denominator, -1, mod))

    def valuation(self) -> int:
        """min(v_p(value), n); a residue 0 only certifies v >= n."""
        if self.value == 0:
            return self.n
        return min(vp(self.value, self.p), self.n)

    def is_unit(self) -> bool:
        return self.value % self.p != 0

    def _coerce(self, other):
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        if isinstance(other, int):
            return PadicInt(self.p, self.n, other)
        if isinstance(other, Fraction):
            return PadicInt.from_fraction(self.p, self.n, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.n, o.n)
        return PadicInt(self.p, n, self.value + o.value)

    __radd__ = __add__

    def __neg__(self):
        return PadicInt(self.p, self.n, -self.value)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.n, o.n)
        return PadicInt(self.p, n, self.value - o.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # abs precision of the product: min(n1 + v2, n2 + v1, n1 + n2)
        v1, v2 = self.valuation(), o.valuation()
        n = min(self.n + v2, o.n + v1, self.n + o.n)
        return PadicInt(self.p, n, self.value * o.value)

    __rmul__ = __mul__

    def inverse(self) -> "PadicInt":
        if not self.is_unit():
            raise ZeroDivisionError("inverse of a non-unit p-adic integer")
        return PadicInt(self.p, self.n, pow(self.value, -1, self.p ** self.n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        w = o.valuation()
        if w == 0:
            n = min(self.n, o.n)
            return PadicInt(self.p, n, self.value * pow(o.value, -1, self.p ** n))
        if o.value == 0:
            raise ZeroDivisionError("division by (apparent) zero")
        if self.valuation() < w:
            raise ValueError("quotient is not a p-adic integer; use PadicNum")
        return (PadicNum.from_padic_int(self) / PadicNum.from_padic_int(o)).to_padic_int()

    def unit_part(self):
        """(v, u) with self = p^v * u, u a unit mod p^(n - v)."""
        v = self.valuation()
        if v >= self.n:
            raise PrecisionError("no unit part visible at this precision")
        return v, PadicInt(self.p, self.n - v, self.value // self.p ** v)

    def with_precision(self, n: int) -> "PadicInt":
        if n > self.n:
            raise PrecisionError("cannot increase precision")
        return PadicInt(self.p, n, self.value)

    def lift(self) -> int:
        """Representative in [0, p^n)."""
        return self.value

    def lift_centered(self) -> int:
        m = self.p ** self.n
        return self.value if self.value <= m // 2 else self.value - m

    def __eq__(self, other):
        """Equality of residues at the shared precision."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.n, o.n)
        return (self.value - o.value) % (self.p ** n) == 0

    def __hash__(self):
        raise TypeError("PadicInt compares at shared precision; not hashable")

    def digits(self, k=None):
        k = self.n if k is None else min(k, self.n)
        x, out = self.value, []
        for _ in range(k):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def __repr__(self):
        return f"{self.value} + O({self.p}^{self.n})"


class PadicNum:
    """p^shift * mantissa with mantissa a PadicInt; absolute precision is
    shift + mantissa.n, and shift may be negative."""

    __slots__ = ("p", "shift", "mant")

    def __init__(self, p: int, shift: int, mant: PadicInt):
        if mant.p != p:
            raise ValueError("prime mismatch")
        self.p = p
        self.shift = shift
        self.mant = mant

    @classmethod
    def from_padic_int(cls, x: PadicInt) -> "PadicNum":
        return cls(x.p, 0, x)

    @classmethod
    def from_fraction(cls, p: int, n: int, x) -> "PadicNum":
        """x as a p-adic number with absolute precision n."""
        x = Fraction(x)
        if x == 0:
            return cls(p, 0, PadicInt(p, n, 0))
        v = vp_fraction(x, p)
        unit = x / Fraction(p) ** v
        digits = n - v
        if digits <= 0:
            raise PrecisionError("value has valuation beyond requested precision")
        return cls(p, v, PadicInt.from_fraction(p, digits, unit))

    @property
    def abs_prec(self) -> int:
        return self.shift + self.mant.n

    def valuation(self) -> int:
        return self.shift + self.mant.valuation()

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def normalized(self) -> "PadicNum":
        """Push any visible p-powers of the mantissa into the shift."""
        if self.mant.value == 0:
            return self
        v, u = self.mant.unit_part()
        return PadicNum(self.p, self.shift + v, u)

    def _coerce(self, other):
        if isinstance(other, PadicNum):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        if isinstance(other, PadicInt):
            return PadicNum.from_padic_int(other)
        if isinstance(other, int):
            return PadicNum(self.p, 0, PadicInt(self.p, self.mant.n, other))
        if isinstance(other, Fraction):
            return PadicNum.from_fraction(self.p, self.abs_prec, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = min(self.shift, o.shift)
        prec = min(self.abs_prec, o.abs_prec)
        digits = prec - s
        if digits <= 0:
            raise PrecisionError("sum has no significant digits")
        a = self.mant.value * self.p ** (self.shift - s)
        b = o.mant.value * self.p ** (o.shift - s)
        return PadicNum(self.p, s, PadicInt(self.p, digits, a + b))

    __radd__ = __add__

    def __neg__(self):
        return PadicNum(self.p, self.shift, -self.mant)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PadicNum(self.p, self.shift + o.shift, self.mant * o.mant)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNum":
        x = self.normalized()
        if x.mant.value == 0:
            raise ZeroDivisionError("inverse of (apparent) zero")
        return PadicNum(self.p, -x.shift, x.mant.inverse())

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inverse()

    def to_padic_int(self) -> PadicInt:
        x = self.normalized()
        if x.mant.value == 0:
            if x.abs_prec < 1:
                raise PrecisionError("zero at no significant precision")
            return PadicInt(self.p, x.abs_prec, 0)
        if x.shift < 0:
            raise ValueError("negative valuation; not a p-adic integer")
        return PadicInt(self.p, x.abs_prec, x.mant.value * self.p ** x.shift)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self - o
        return d.mant.value == 0

    def __hash__(self):
        raise TypeError("PadicNum compares at shared precision; not hashable")

    def __repr__(self):
        x = self.normalized()
        return f"{x.mant.value}*{self.p}^{x.shift} + O({self.p}^{x.abs_prec})"


def hensel_unit_root(a, b, p: int, n: int) -> PadicInt:
    """Unit root of X^2 - aX + b when v_p(a) = 0 and v_p(b) > 0.

    Newton iteration from X = a; the result alpha satisfies
    alpha^2 - a*alpha + b = 0 mod p^n and alpha = a mod p.  The cofactor is
    b / alpha, with v_p(cofactor) = v_p(b).
    """
    mod = p ** n
    a0 = _to_residue(a, p, n)
    b0 = _to_residue(b, p, n)
    if a0 % p == 0:
        raise NotOrdinary(f"v_{p}(a) > 0: no unit root")
    if b0 % p != 0:
        raise NotOrdinary(f"v_{p}(b) = 0: both roots are units, polynomial not ordinary-shaped")
    x = a0 % mod
    for _ in range(n.bit_length() + 2):
        fx = (x * x - a0 * x + b0) % mod
        if fx == 0:
            break
        dfx = (2 * x - a0) % mod
        x = (x - fx * pow(dfx, -1, mod)) % mod
    assert (x * x - a0 * x + b0) % mod == 0
    return PadicInt(p, n, x)


def hensel_cofactor(a, b, p: int, n: int):
    """(alpha, beta) = (unit root, b/alpha) of X^2 - aX + b."""
    alpha = hensel_unit_root(a, b, p, n)
    beta = PadicInt(p, n, _to_residue(b, p, n)) * alpha.inverse()
    return alpha, beta


def _to_residue(x, p: int, n: int) -> int:
    if isinstance(x, PadicInt):
        if x.n < n:
            raise PrecisionError("input precision too small")
        return x.value % p ** n
    if isinstance(x, PadicNum):
        return _to_residue(x.to_padic_int(), p, n)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError("not p-integral")
    return x.numerator * pow(x.denominator, -1, p ** n) % p ** n


def hensel_lift_root(poly, p: int, n: int, r0: int) -> int:
    """Lift a simple root r0 of an integer polynomial mod p to mod p^n."""
    coeffs = [int(c) for c in poly]
    der = [i * c for i, c in enumerate(coeffs)][1:]

    def ev(cs, x, m):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % m
        return acc

    if ev(coeffs, r0, p) != 0:
        raise ValueError("r0 is not a root mod p")
    if ev(der, r0, p) == 0:
        raise ValueError("root is not simple mod p")
    x, mod = r0 % p, p
    while mod < p ** n:
        mod = min(mod * mod, p ** n)
        x = (x - ev(coeffs, x, mod) * pow(ev(der, x, mod), -1, mod)) % mod
    return x


def teichmuller(u: int, p: int, n: int) -> PadicInt:
    """Teichmuller representative: the (p-1)-st root of unity congruent to u."""
    if u % p == 0:
        raise ValueError("u must be a p-adic unit")
    mod = p ** n
    x = u % mod
    while True:
        y = pow(x, p, mod)
        if y == x:
            return PadicInt(p, n, x)
        x = y


def plog(x: PadicInt) -> PadicInt:
    """log(x) for x = 1 mod p (p odd): sum (-1)^(j+1) (x-1)^j / j."""
    p, n = x.p, x.n
    if p == 2:
        raise ValueError("p = 2 is out of scope")
    if x.value % p != 1:
        raise ValueError("plog needs x = 1 mod p")
    # guard digits cover the divisions by p^(v_p(j))
    e = 1
    while p ** e <= n + e + 1:
        e += 1
    jmax = n + e
    N = n + e
    modN = p ** N
    z = x.value - 1  # v_p >= 1
    zj, acc = 1, 0
    for j in range(1, jmax + 1):
        zj = zj * z % modN
        v, ju = 0, j
        while ju % p == 0:
            ju //= p
            v += 1
        term = (zj // p ** v) * pow(ju, -1, modN) % modN
        acc = (acc - term if j % 2 == 0 else acc + term) % modN
    return PadicInt(p, n, acc)
