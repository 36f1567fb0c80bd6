"""Branch-decomposed elements of the completed group algebra of the
p-adic units, the logarithm coordinate on weight space, the p-adic zeta
function, and residues at the trivial character.

Conventions (p odd throughout):

* weight space coordinate: T = kappa(1+p) - 1 for the fixed topological
  generator 1+p of the principal units;
* an integer weight k lives on branch k mod (p-1) and at the point
  T_k = (1+p)^k - 1;
* the p-adic zeta function is presented per even branch; on the zero
  branch it is a fraction with denominator exactly T, which makes the
  simple pole and its residue explicit.

Series coefficients are p-adic numbers with a valuation shift
(:class:`padicasai.padic.PadicNum`): the logarithm series has genuinely
negative-valuation coefficients, so a strictly integral coefficient type
would not hold it.  ``IwasawaElem.is_integral`` checks membership in the
integral algebra where the contracts require it.
"""

from __future__ import annotations

from fractions import Fraction

from .numberfield import bernoulli
from .padic import PadicInt, PadicNum, plog, vp, vp_fraction
from .series import PowerSeries, series_invert


class BranchMismatch(ValueError):
    pass


class PoleError(ArithmeticError):
    pass


class WeightChar:
    """Integer weight k, or an explicit (branch, T-value) pair."""

    def __init__(self, k=None, branch=None, t_value=None):
        if k is not None:
            self.k = int(k)
            self.branch = None
            self.t_value = None
        else:
            if branch is None or t_value is None:
                raise ValueError("need k, or branch and T-value")
            self.k = None
            self.branch = int(branch)
            self.t_value = t_value

    def branch_mod(self, p: int) -> int:
        return self.k % (p - 1) if self.k is not None else self.branch % (p - 1)

    def t_at(self, p: int, n: int) -> PadicInt:
        if self.k is not None:
            return PadicInt(p, n, pow(1 + p, self.k, p ** n) - 1)
        t = self.t_value
        if isinstance(t, PadicNum):
            t = t.to_padic_int()
        if isinstance(t, PadicInt):
            if t.n < n:
                raise ValueError("T-value precision too small")
            return t.with_precision(n)
        return PadicInt.from_fraction(p, n, t)

    def __repr__(self):
        if self.k is not None:
            return f"WeightChar(k={self.k})"
        return f"WeightChar(branch={self.branch}, T={self.t_value})"


def _as_weight(w) -> WeightChar:
    return w if isinstance(w, WeightChar) else WeightChar(k=w)


class IwasawaElem:
    """Power series in T over p-adic numbers, tagged with a branch index
    mod p-1: the branch component of an element of the group algebra."""

    def __init__(self, p: int, branch: int, series: PowerSeries, n: int):
        self.p = p
        self.branch = branch % (p - 1)
        self.series = series
        self.n = n          # coefficient precision target (absolute)
        self.m = series.order

    @classmethod
    def from_coeffs(cls, p, branch, coeffs, n):
        cs = []
        for c in coeffs:
            if isinstance(c, PadicNum):
                cs.append(c)
            elif isinstance(c, PadicInt):
                cs.append(PadicNum.from_padic_int(c))
            else:
                cs.append(PadicNum.from_fraction(p, n, c))
        return cls(p, branch, PowerSeries(cs, var="T"), n)

    @classmethod
    def constant(cls, p, branch, value, n, m):
        z = PadicNum(p, 0, PadicInt(p, n, 0))
        first = value if isinstance(value, PadicNum) else PadicNum.from_fraction(p, n, value)
        return cls(p, branch, PowerSeries([first] + [z] * (m - 1), var="T"), n)

    def is_integral(self) -> bool:
        return all(c.valuation() >= 0 for c in self.series.coeffs)

    def _check(self, other):
        if self.p != other.p:
            raise ValueError("mixed primes")
        if self.branch != other.branch:
            raise BranchMismatch(f"branch {self.branch} vs {other.branch}")

    def __add__(self, other):
        if isinstance(other, IwasawaElem):
            self._check(other)
            return IwasawaElem(self.p, self.branch, self.series + other.series, min(self.n, other.n))
        return IwasawaElem(self.p, self.branch, self.series + other, self.n)

    def __neg__(self):
        return IwasawaElem(self.p, self.branch, -self.series, self.n)

    def __sub__(self, other):
        return self + (-other if isinstance(other, IwasawaElem) else -1 * other)

    def __mul__(self, other):
        if isinstance(other, IwasawaElem):
            self._check(other)
            return IwasawaElem(self.p, self.branch, self.series * other.series, min(self.n, other.n))
        return IwasawaElem(self.p, self.branch, self.series * other, self.n)

    __rmul__ = __mul__

    def ord_T(self):
        v = self.series.valuation_T()
        return self.m if v is None else v

    def eval_weight(self, w) -> PadicNum:
        w = _as_weight(w)
        if w.branch_mod(self.p) != self.branch:
            raise BranchMismatch(
                f"weight lies on branch {w.branch_mod(self.p)}, element on {self.branch}")
        t = PadicNum.from_padic_int(w.t_at(self.p, self.n))
        return self.series.eval(t)

    def __repr__(self):
        return f"IwasawaElem(p={self.p}, branch={self.branch}, {self.series})"


class IwasawaFraction:
    """num/den of branch elements, with the pole order at T = 0 cached."""

    def __init__(self, num: IwasawaElem, den: IwasawaElem):
        num._check(den)
        if den.ord_T() >= den.m:
            raise ZeroDivisionError("denominator is 0 to working order")
        self.num = num
        self.den = den
        self.p = num.p
        self.branch = num.branch
        self.pole_order = max(0, den.ord_T() - num.ord_T())

    def eval_weight(self, w) -> PadicNum:
        a = self.num.eval_weight(w)
        b = self.den.eval_weight(w)
        if b.mant.value == 0:
            raise PoleError("denominator vanishes at this weight (to precision)")
        return a / b

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


def ell_log(w, p: int, n: int) -> PadicInt:
    """The logarithm coordinate at a weight: k at the character x -> x^k."""
    w = _as_weight(w)
    if w.k is not None:
        return PadicInt(p, n, w.k)
    t = w.t_at(p, n)
    lg = plog(PadicInt(p, n, 1 + t.value))
    return (PadicNum.from_padic_int(lg) / PadicNum.from_padic_int(plog(PadicInt(p, n, 1 + p)))).to_padic_int()


def ell_series(p: int, n: int, m: int, branch: int = 0) -> IwasawaElem:
    """log(1+T)/log(1+p) as a T-series: simple zero at T = 0, value k at
    integer weights k.  Coefficients have negative valuation (the series
    is rigid-analytic on the closed weight disc, not integral)."""
    extra = 2
    while p ** extra <= m + 2:
        extra += 1
    work = n + extra + 1
    lg = plog(PadicInt(p, work, 1 + p))
    inv_lg = PadicNum.from_padic_int(lg).inverse()
    coeffs = [PadicNum(p, 0, PadicInt(p, work, 0))]
    for j in range(1, m):
        cj = PadicNum.from_fraction(p, work, Fraction((-1) ** (j + 1), j))
        coeffs.append(cj * inv_lg)
    return IwasawaElem(p, branch, PowerSeries(coeffs, var="T"), n)


def _euler_zeta_value(p: int, k: int) -> Fraction:
    """-(1 - p^(k-1)) B_k / k for k >= 1."""
    return -(1 - Fraction(p) ** (k - 1)) * bernoulli(k) / k


def _newton_interpolate(p, points, values, work):
    """Coefficients (monomial basis) of the polynomial through the given
    p-adic points, via divided differences.  points are PadicInt at the
    working precision; values PadicNum."""
    m = len(points)
    dd = [list(values)]
    for r in range(1, m):
        row = []
        for j in range(m - r):
            num = dd[r - 1][j + 1] - dd[r - 1][j]
            den = PadicNum.from_padic_int(points[j + r] - points[j])
            row.append(num / den)
        dd.append(row)
    # expand the Newton form sum dd[r][0] * prod_{i<r} (T - t_i)
    zero = PadicNum(p, 0, PadicInt(p, work, 0))
    coeffs = [zero] * m
    basis = [PadicNum(p, 0, PadicInt(p, work, 1))] + [zero] * (m - 1)  # current product
    for r in range(m):
        lead = dd[r][0]
        for i in range(r + 1):
            coeffs[i] = coeffs[i] + lead * basis[i]
        if r < m - 1:
            t = PadicNum.from_padic_int(points[r])
            new = [zero] * m
            for i in range(r + 1):
                if i + 1 < m:
                    new[i + 1] = new[i + 1] + basis[i]
                new[i] = new[i] - t * basis[i]
            basis = new
    return coeffs


def kubota_leopoldt(p: int, branch: int, n: int = 10, m: int = 12) -> IwasawaFraction | IwasawaElem:
    """Branch component of the p-adic zeta function interpolating
    -(1 - p^(k-1)) B_k / k at integer weights k = branch mod (p-1).

    Construction: the first m T-coefficients are solved from values at m
    integer weights (divided-difference interpolation; the divided
    differences of an integral series at points of the p-adic unit disc
    are integral, so out-of-sample weights agree mod p^min(n, m)).
    On the zero branch the object is a fraction with denominator T and a
    simple pole of residue 1 - 1/p.
    """
    if p == 2:
        raise ValueError("p = 2 is out of scope")
    branch = branch % (p - 1)
    if branch % 2 == 1:
        raise ValueError("odd branch requested: the zeta branches are even")
    if m < n:
        m = n  # interpolation error is O(p^m) at integer weights
    # generous working precision: divided differences lose
    # v_p(t_{j+r} - t_j) = 1 + v_p(delta) per step
    loss = m + 2 * sum(vp_fraction(Fraction(j), p) for j in range(1, m)) + 4
    work = n + loss
    ks = []
    k = branch if branch != 0 else (p - 1)
    while len(ks) < m:
        ks.append(k)
        k += p - 1
    points = [PadicInt(p, work, pow(1 + p, kk, p ** work) - 1) for kk in ks]
    if branch == 0:
        # interpolate T * zeta(T): integral with nonzero constant term
        values = [PadicNum.from_padic_int(t) * PadicNum.from_fraction(p, work, _euler_zeta_value(p, kk))
                  for t, kk in zip(points, ks)]
    else:
        values = [PadicNum.from_fraction(p, work, _euler_zeta_value(p, kk)) for kk in ks]
    coeffs = _newton_interpolate(p, points, values, work)
    num = IwasawaElem(p, branch, PowerSeries(coeffs, var="T"), n)
    if branch != 0:
        return num
    zero = PadicNum(p, 0, PadicInt(p, work, 0))
    one = PadicNum(p, 0, PadicInt(p, work, 1))
    den = IwasawaElem(p, 0, PowerSeries([zero, one] + [zero] * (m - 2), var="T"), n)
    return IwasawaFraction(num, den)


def residue_at_trivial(f) -> PadicNum:
    """Residue of a branch-zero fraction with at most a simple pole at the
    trivial character, with respect to the uniformizer oriented like the
    classical zeta variable.

    The logarithm coordinate ell has ell = k at weight k; writing the zeta
    normalization s = 1 - kappa, the classical uniformizer s - 1 equals
    -ell(kappa).  Residues here are taken against s - 1, which is the
    orientation under which the branch-zero p-adic zeta has residue
    1 - 1/p and the ordinary Eisenstein family's residue is the constant
    form 1 - 1/p.  (Against +ell both constants would flip sign.)
    """
    if isinstance(f, IwasawaElem):
        return PadicNum(f.p, 0, PadicInt(f.p, f.n, 0))  # ell vanishes there
    if f.pole_order >= 2:
        raise PoleError("pole order >= 2 at the trivial character")
    if f.branch != 0:
        raise BranchMismatch("the trivial character lies on branch 0")
    p = f.p
    e = f.den.ord_T()
    ell = ell_series(p, f.num.n, f.num.m, branch=0)
    if e == 0:
        num = ell.series * f.num.series
        den = f.den.series
    else:
        # den = T^e u with u(0) invertible; ell has a simple zero, and the
        # pole-order bound puts T^(e-1) inside num, so
        # ell * num / den = (ell/T) * (num/T^(e-1)) / u
        numr = f.num.series.divide_T(e - 1) if e > 1 else f.num.series
        num = ell.series.divide_T(1) * numr
        den = f.den.series.divide_T(e)
    inv = series_invert(den, num.order)
    return -(num * inv).coeffs[0]


def kummer_check(p: int, k1: int, k2: int, a: int | None = None) -> bool:
    """(1 - p^(k1-1)) B_k1 / k1 = (1 - p^(k2-1)) B_k2 / k2 mod p^(a+1)
    whenever k1 = k2 mod (p-1) p^a and both are off the zero branch."""
    if k1 % (p - 1) == 0 or k1 % (p - 1) != k2 % (p - 1):
        raise ValueError("need k1 = k2 != 0 mod (p-1)")
    if a is None:
        a = 0
        d = abs(k1 - k2) // (p - 1)
        while d and d % p == 0:
            d //= p
            a += 1
    if (k1 - k2) % ((p - 1) * p ** a) != 0:
        raise ValueError("k1 and k2 are not congruent mod (p-1)p^a")
    if k1 == k2:
        return True
    diff = -_euler_zeta_value(p, k1) + _euler_zeta_value(p, k2)
    return diff == 0 or vp_fraction(diff, p) >= a + 1
