"""Dense truncated power series over a duck-typed coefficient ring.

Coefficients only need +, -, *, an equality test against 0/other
coefficients, and tolerance for integer scalars (all the rings in this
package provide that).  ``order`` is the number of known coefficients:
a series of order m represents f + O(T^m), and no operation ever reports
coefficients beyond the truncation order.
"""

from __future__ import annotations


class PowerSeries:
    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs, order=None, var="T"):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("order must be >= 1")
        if len(coeffs) < order:
            raise ValueError("need a coefficient for every index below the order")
        self.coeffs = coeffs[:order]
        self.order = order
        self.var = var

    @property
    def zero_coeff(self):
        return self.coeffs[0] * 0

    def __getitem__(self, i):
        if i >= self.order:
            raise IndexError("coefficient beyond truncation order")
        return self.coeffs[i]

    def _align(self, other):
        if not isinstance(other, PowerSeries):
            # scalar: promote to a constant series of our order
            z = self.zero_coeff
            other = PowerSeries([z + other] + [z] * (self.order - 1), self.order, self.var)
        return other

    def __add__(self, other):
        o = self._align(other)
        m = min(self.order, o.order)
        return PowerSeries([self.coeffs[i] + o.coeffs[i] for i in range(m)], m, self.var)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-self._align(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.order, self.var)
        m = min(self.order, other.order)
        z = self.zero_coeff
        out = [z for _ in range(m)]
        for i in range(m):
            a = self.coeffs[i]
            if _is_zero(a):
                continue
            for j in range(m - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return PowerSeries(out, m, self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by T^k (k >= 0) keeping the same order."""
        z = self.zero_coeff
        return PowerSeries(([z] * k + self.coeffs)[: self.order], self.order, self.var)

    def valuation_T(self):
        """Index of the first coefficient that is not 0 (None if all are)."""
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return None

    def divide_T(self, k: int) -> "PowerSeries":
        """Exact division by T^k; the low coefficients must vanish.

        The order drops by k: f = T^k g + O(T^m) only determines g mod
        T^(m-k)."""
        if k == 0:
            return self
        for i in range(k):
            if not _is_zero(self.coeffs[i]):
                raise ValueError("series not divisible by T^k")
        if self.order - k < 1:
            raise ValueError("no coefficients left after division")
        return PowerSeries(self.coeffs[k:], self.order - k, self.var)

    def eval(self, t):
        """Horner evaluation at a point of the coefficient ring."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * t + c
        return acc

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[:order], order, self.var)

    def __eq__(self, other):
        o = self._align(other)
        m = min(self.order, o.order)
        return all(self.coeffs[i] == o.coeffs[i] for i in range(m))

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            if i == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{self.var}^{i}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.var}^{self.order})"


def _is_zero(c):
    try:
        return c == c * 0
    except TypeError:
        return False


def series_invert(f: PowerSeries, order=None) -> PowerSeries:
    """Multiplicative inverse up to the truncation order.

    The constant term must be invertible in the coefficient ring (it needs
    an ``inverse`` method, or be a Fraction/field element supporting 1/x).
    """
    order = f.order if order is None else min(order, f.order)
    c0 = f.coeffs[0]
    inv0 = c0.inverse() if hasattr(c0, "inverse") else 1 / c0
    z = f.zero_coeff
    out = [inv0] + [z] * (order - 1)
    # recursion: sum_{j<=i} f_j * g_{i-j} = 0 for i >= 1
    for i in range(1, order):
        acc = z
        for j in range(1, min(i, f.order - 1) + 1):
            acc = acc + f.coeffs[j] * out[i - j]
        out[i] = -(inv0 * acc)
    return PowerSeries(out, order, f.var)
