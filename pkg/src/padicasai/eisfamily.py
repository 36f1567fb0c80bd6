"""q-expansions of the two-parameter Eisenstein family's one-parameter
slices, the ordinary (flat) family with its zeta constant term, the sharp
family's non-constant coefficients, classical specializations, and the
U_p / V_p / depletion operator calculus.

Coefficients of the p-adic families live in R = (Z/p^n)[x]/Phi_N(x)
(exact cyclotomic arithmetic mod p^n; a root embedding into Z_p exists
iff p = 1 mod N and is applied only in reports).  Per branch i mod (p-1),
a non-constant coefficient is a T-series; the weight-k value is also
computed by a direct integer sum, which is what the stabilization check
uses.

Two slices of the two-parameter family appear in the depletion
identities: (kappa-1, 0), the depletion of the flat family, and
(0, kappa-1), the depletion of the sharp one.  One source in the
literature abbreviates the latter in a way that collides with the former;
both are provided (`katz_slice(..., side="u")` / `side="v"`) so the
discrepancy is visible rather than silently resolved.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .numberfield import Rational, cyclotomic_field, cyclotomic_polynomial, zeta_neg
from .padic import PadicInt, PadicNum, plog, teichmuller, vp
from .series import PowerSeries
from .iwasawa import IwasawaElem, IwasawaFraction, kubota_leopoldt, residue_at_trivial


class CycloPadicRing:
    """(Z/p^n)[x] / Phi_N(x)."""

    def __init__(self, p: int, n: int, N: int):
        self.p, self.n, self.N = p, n, N
        self.mod = p ** n
        phi = cyclotomic_polynomial(N)
        self.deg = len(phi) - 1
        self.red = [(-c) % self.mod for c in phi[:-1]]
        pows = []
        cur = [1] + [0] * (self.deg - 1)
        for _ in range(N):
            pows.append(tuple(cur))
            cur = self._shift(cur)
        self._zeta_pows = pows

    def _shift(self, coords):
        top = coords[-1]
        out = [0] + list(coords[:-1])
        if top:
            out = [(c + top * r) % self.mod for c, r in zip(out, self.red)]
        return [c % self.mod for c in out]

    def elem(self, coords):
        if isinstance(coords, int):
            coords = [coords] + [0] * (self.deg - 1)
        return CycloPadicElem(self, tuple(c % self.mod for c in coords))

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)

    def zeta(self, v: int):
        return CycloPadicElem(self, self._zeta_pows[v % self.N])

    def from_cyclotomic(self, x):
        """Map an element of the order-N cyclotomic field (p-unit
        denominators) into the ring."""
        coords = []
        for c in x.coords:
            c = Fraction(c)
            coords.append(c.numerator * pow(c.denominator, -1, self.mod) % self.mod)
        return self.elem(coords)

    def __eq__(self, other):
        return isinstance(other, CycloPadicRing) and (self.p, self.n, self.N) == (other.p, other.n, other.N)

    def __repr__(self):
        return f"CycloPadicRing(p={self.p}, n={self.n}, N={self.N})"


class CycloPadicElem:
    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = coords

    def _co(self, other):
        if isinstance(other, CycloPadicElem):
            return other
        if isinstance(other, int):
            return self.ring.elem(other)
        if isinstance(other, PadicInt):
            return self.ring.elem(other.value)
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        m = self.ring.mod
        return CycloPadicElem(self.ring, tuple((a + b) % m for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        m = self.ring.mod
        return CycloPadicElem(self.ring, tuple(-a % m for a in self.coords))

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        m = self.ring.mod
        d = self.ring.deg
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    prod[i + j] = (prod[i + j] + a * b) % m
        while len(prod) > d:
            top = prod.pop()
            if top:
                off = len(prod) - d
                for j, r in enumerate(self.ring.red):
                    prod[off + j] = (prod[off + j] + top * r) % m
        return CycloPadicElem(self.ring, tuple(prod))

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return f"({list(self.coords)} in {self.ring!r})"


# --- branch-decomposed powers -------------------------------------------

@lru_cache(maxsize=None)
def _unit_data(p: int, work: int, u: int):
    """(teichmuller digit omega(u) mod p^work, <u> = u/omega(u),
    l_u = log<u>/log(1+p)) as integers mod p^work."""
    mod = p ** work
    w = teichmuller(u, p, work).value
    principal = u * pow(w, -1, mod) % mod
    lg = plog(PadicInt(p, work, principal))
    lgp = plog(PadicInt(p, work, 1 + p))
    ell = (PadicNum.from_padic_int(lg) / PadicNum.from_padic_int(lgp)).to_padic_int()
    return w, principal, ell.value % mod


@lru_cache(maxsize=None)
def _binom_series_int(p: int, work: int, u: int, order: int):
    """Coefficients of (1+T)^(l_u) to the given order, mod p^(work - loss)
    with the j! losses absorbed by the working precision."""
    mod = p ** work
    _, _, ell = _unit_data(p, work, u)
    out = [1]
    num = 1
    fact_unit, fact_v = 1, 0
    for j in range(1, order):
        num = num * ((ell - (j - 1)) % mod) % mod
        jj, v = j, 0
        while jj % p == 0:
            jj //= p
            v += 1
        fact_unit = fact_unit * jj % mod
        fact_v += v
        # binomial coefficients of a Z_p exponent are integral, so the
        # accumulated numerator carries the p-power of j!
        assert num % p ** fact_v == 0, "precision exhausted in binomial series"
        out.append((num // p ** fact_v) * pow(fact_unit, -1, mod) % mod)
    return tuple(out)


def _u_power_series(ring: CycloPadicRing, branch: int, u: int, order: int, work: int):
    """u^(kappa - 1) on the given branch as a T-series over the ring:
    omega(u)^(branch-1) <u>^(-1) (1+T)^(l_u)."""
    p = ring.p
    w, principal, _ = _unit_data(p, work, u)
    scalar = pow(w, (branch - 1) % (p - 1), ring.mod) * pow(principal, -1, ring.mod) % ring.mod
    binom = _binom_series_int(p, work, u, order)
    return [ring.elem(scalar * (b % ring.mod)) for b in binom]


def _u_power_at_weight(ring: CycloPadicRing, u: int, k: int):
    """u^(k-1) mod p^n (direct, no branch machinery)."""
    return ring.elem(pow(u, k - 1, ring.mod))


def _zeta_pair(ring: CycloPadicRing, v: int, sign: int):
    """zeta^v + sign * zeta^(-v)."""
    z = ring.zeta(v) + sign * ring.zeta(-v)
    return z


def _divisor_pairs(n: int):
    out = []
    u = 1
    while u * u <= n:
        if n % u == 0:
            out.append((u, n // u))
            if u != n // u:
                out.append((n // u, u))
        u += 1
    return out


class EisFamily:
    """One-parameter Eisenstein family over level N at the prime p.

    kind: 'flat' (ordinary; constant term is the branch zeta fraction),
    'sharp' (non-constant coefficients only), 'katz-u' (the slice with
    exponents (kappa-1, 0)), 'katz-v' (the slice (0, kappa-1)).
    """

    _SUM_RULES = {
        # (u-condition, v-condition, power-carrier): carrier 'u' means the
        # term is u^(kappa-1), 'v' means v^(kappa-1)
        "flat": (True, False, "u"),
        "katz-u": (True, True, "u"),
        "sharp": (False, True, "v"),
        "katz-v": (True, True, "v"),
    }

    def __init__(self, kind: str, N: int, p: int, prec: int = 10, t_order: int = 8):
        if kind not in self._SUM_RULES:
            raise ValueError(f"unknown kind {kind!r}")
        if N % p == 0:
            raise ValueError("level must be prime to p")
        if p == 2:
            raise ValueError("p = 2 is out of scope")
        self.kind = kind
        self.N, self.p, self.prec, self.t_order = N, p, prec, t_order
        self.ring = CycloPadicRing(p, prec, N)
        e = 1
        while p ** e <= t_order + 1:
            e += 1
        self._work = prec + e + 2

    def _terms(self, n: int):
        need_pu, need_pv, carrier = self._SUM_RULES[self.kind]
        for u, v in _divisor_pairs(n):
            if need_pu and u % self.p == 0:
                continue
            if need_pv and v % self.p == 0:
                continue
            yield (u if carrier == "u" else v), v

    def coeff_series(self, n: int, branch: int) -> PowerSeries:
        """T-series (over the cyclotomic ring) of the n-th coefficient on
        the given branch, n >= 1."""
        if n < 1:
            raise ValueError("series coefficients start at n = 1")
        branch %= self.p - 1
        sign = -1 if branch % 2 else 1
        acc = [self.ring.zero] * self.t_order
        for w, v in self._terms(n):
            zs = _zeta_pair(self.ring, v, sign)
            if zs.is_zero():
                continue
            ser = _u_power_series(self.ring, branch, w, self.t_order, self._work)
            for j in range(self.t_order):
                acc[j] = acc[j] + ser[j] * zs
        return PowerSeries(acc, var="T")

    def coeff_at_weight(self, n: int, k: int) -> CycloPadicElem:
        """Exact value of the n-th coefficient at the integer weight k >= 1
        (lands on branch k mod (p-1))."""
        if k < 1:
            raise ValueError("integer weights start at k = 1")
        sign = -1 if k % 2 else 1
        acc = self.ring.zero
        for w, v in self._terms(n):
            acc = acc + _u_power_at_weight(self.ring, w, k) * _zeta_pair(self.ring, v, sign)
        return acc

    def constant_fraction(self, branch: int):
        """Constant term on a branch: the zeta fraction for the flat kind
        (zero element on odd branches, where the interpolated values all
        vanish); sharp and slice kinds do not carry one."""
        if self.kind != "flat":
            return None
        branch %= self.p - 1
        if branch % 2 == 1:
            return IwasawaElem.constant(self.p, branch, 0, self.prec, self.t_order)
        return kubota_leopoldt(self.p, branch, n=self.prec, m=max(self.t_order, self.prec))

    def constant_at_weight(self, k: int) -> PadicNum:
        if self.kind != "flat":
            raise ValueError("only the flat family has a constant term here")
        c = self.constant_fraction(k % (self.p - 1))
        return c.eval_weight(k)

    def qexp_at_weight(self, k: int, trunc: int) -> "QExp":
        coeffs = {n: self.coeff_at_weight(n, k) for n in range(1, trunc)}
        const = self.constant_at_weight(k) if self.kind == "flat" else None
        return QExp(coeffs, trunc, constant=const)

    def qexp_series(self, branch: int, trunc: int) -> "QExp":
        coeffs = {n: self.coeff_series(n, branch) for n in range(1, trunc)}
        const = self.constant_fraction(branch) if self.kind == "flat" else None
        return QExp(coeffs, trunc, constant=const)


def katz_coeff(N: int, n: int, weights, p: int, prec: int = 10):
    """Two-parameter family coefficient at an integer weight pair (a, b):
    sum over factorizations n = uv, u, v > 0, p not dividing uv, of
    u^a v^b (zeta^v + (-1)^(a+b+1) zeta^(-v))."""
    a, b = weights
    if N % p == 0:
        raise ValueError("level must be prime to p")
    if a < 0 or b < 0:
        raise ValueError("integer weights must be >= 0")
    ring = CycloPadicRing(p, prec, N)
    sign = (-1) ** (a + b + 1)
    acc = ring.zero
    for u, v in _divisor_pairs(n):
        if u % p == 0 or v % p == 0:
            continue
        acc = acc + ring.elem(pow(u, a, ring.mod) * pow(v, b, ring.mod)) * _zeta_pair(ring, v, sign)
    return acc


class QExp:
    """q-expansion container: coefficients for 1 <= n < trunc plus an
    optional constant term; the operator calculus is ring-agnostic."""

    def __init__(self, coeffs: dict, trunc: int, constant=None):
        self.coeffs = dict(coeffs)
        self.trunc = trunc
        self.constant = constant

    def coeff(self, n: int):
        """Stored coefficient; a missing key means a structural zero and
        comes back as None."""
        if not 1 <= n < self.trunc:
            raise IndexError(f"coefficient q^{n} beyond truncation {self.trunc}")
        return self.coeffs.get(n)

    def up(self, p: int) -> "QExp":
        """U_p: a_n -> a_{np}; needs source truncation >= p * target."""
        new_trunc = (self.trunc + p - 1) // p
        if new_trunc < 2:
            raise ValueError("truncation too small for U_p")
        out = {}
        for n in range(1, new_trunc):
            v = self.coeffs.get(n * p)
            if v is not None:
                out[n] = v
        return QExp(out, new_trunc, constant=self.constant)

    def vp(self, p: int) -> "QExp":
        """V_p: coefficient placed at np; the constant term stays put."""
        out = {}
        for n in range(1, self.trunc):
            if n % p == 0 and n // p in self.coeffs:
                out[n] = self.coeffs[n // p]
        return QExp(out, self.trunc, constant=self.constant)

    def deplete(self, p: int) -> "QExp":
        """1 - V_p U_p: kills coefficients with p | n."""
        out = {n: v for n, v in self.coeffs.items() if n % p != 0}
        return QExp(out, self.trunc, constant=self.constant)

    def scale(self, c) -> "QExp":
        out = {n: c * v for n, v in self.coeffs.items()}
        const = None if self.constant is None else c * self.constant
        return QExp(out, self.trunc, constant=const)

    def sub(self, other: "QExp") -> "QExp":
        trunc = min(self.trunc, other.trunc)
        out = {}
        for n in range(1, trunc):
            a = self.coeffs.get(n)
            b = other.coeffs.get(n)
            if a is None and b is None:
                continue
            if a is None:
                out[n] = -b
            elif b is None:
                out[n] = a
            else:
                out[n] = a - b
        const = None
        if self.constant is not None or other.constant is not None:
            ca = self.constant
            cb = other.constant
            const = (ca if ca is not None else 0) - (cb if cb is not None else 0)
        return QExp(out, trunc, constant=const)

    def is_zero(self) -> bool:
        for v in self.coeffs.values():
            z = v * 0 if not hasattr(v, "is_zero") else None
            if hasattr(v, "is_zero"):
                if not v.is_zero():
                    return False
            elif not v == z:
                return False
        return True


class ClassicalQExp:
    """Classical Eisenstein expansion with exact cyclotomic coefficients.

    F-kind: constant term zeta(1-k), coefficient sum u^(k-1) sgn(u) zeta^v
    over uv = n, uv > 0.  E-kind: exponents swapped; its constant term is
    not pinned down here and is reported as unspecified (None).
    """

    def __init__(self, kind: str, k: int, N: int, trunc: int):
        if kind not in ("E", "F"):
            raise ValueError("kind must be 'E' or 'F'")
        if k < 1 or N < 1:
            raise ValueError("need k >= 1 and N >= 1")
        self.kind, self.k, self.N, self.trunc = kind, k, N, trunc
        self.field = cyclotomic_field(N)
        z = self.field.gen
        sign = (-1) ** k
        self.coeffs = {}
        for n in range(1, trunc):
            acc = self.field.zero
            for u, v in _divisor_pairs(n):
                w = u if kind == "F" else v
                acc = acc + (z ** (v % N) + sign * z ** (-v % N)) * Fraction(w) ** (k - 1)
            self.coeffs[n] = acc
        self.constant = zeta_neg(k) if kind == "F" else None
        self.constant_convention = ("zeta(1-k)" if kind == "F" else "unspecified")

    def qexp(self) -> QExp:
        return QExp(self.coeffs, self.trunc, constant=self.constant)


def classical_kato(kind: str, k: int, N: int, trunc: int) -> ClassicalQExp:
    return ClassicalQExp(kind, k, N, trunc)


def flat_family(N, p, prec=10, t_order=8):
    return EisFamily("flat", N, p, prec, t_order)


def sharp_family(N, p, prec=10, t_order=8):
    return EisFamily("sharp", N, p, prec, t_order)


def katz_slice(N, p, side="u", prec=10, t_order=8):
    """The one-parameter slices of the two-parameter family: side='u' is
    the slice (kappa-1, 0) (depletion of the flat family), side='v' the
    slice (0, kappa-1) (depletion of the sharp family)."""
    return EisFamily("katz-u" if side == "u" else "katz-v", N, p, prec, t_order)


def depletion_check(N: int, p: int, side: str = "u", trunc: int = 200,
                    prec: int = 10, t_order: int = 6) -> bool:
    """deplete(flat) = slice (kappa-1, 0) (resp. deplete(sharp) = slice
    (0, kappa-1)) coefficientwise at symbolic branch level."""
    fam = flat_family(N, p, prec, t_order) if side == "u" else sharp_family(N, p, prec, t_order)
    slc = katz_slice(N, p, side, prec, t_order)
    for branch in range(p - 1):
        for n in range(1, trunc):
            rhs = slc.coeff_series(n, branch)
            if n % p == 0:
                # depleted away on the left; the slice must vanish too
                if any(not c.is_zero() for c in rhs.coeffs):
                    return False
                continue
            if fam.coeff_series(n, branch) != rhs:
                return False
    return True


def up_kills_slice(N: int, p: int, trunc: int = 100, prec: int = 8) -> bool:
    """U_p annihilates the two-parameter slices (all coefficients at
    indices np vanish)."""
    slc = katz_slice(N, p, "u", prec, 4)
    for branch in range(p - 1):
        q = slc.qexp_series(branch, trunc)
        u = q.up(p)
        for n in range(1, u.trunc):
            if any(not c.is_zero() for c in u.coeffs[n].coeffs):
                return False
    return True


def stabilization_check(k: int, N: int, p: int, trunc: int = 200, prec: int = 10) -> bool:
    """Flat family at weight k equals the ordinary p-stabilization
    F^(k) - p^(k-1) V_p F^(k) of the classical expansion, coefficientwise
    to the truncation, constants compared through the interpolation
    (1 - p^(k-1)) zeta(1-k)."""
    if k < 2:
        raise ValueError("need k >= 2")
    fam = flat_family(N, p, prec, t_order=4)
    ring = fam.ring
    classical = classical_kato("F", k, N, trunc)
    stab = classical.qexp().sub(classical.qexp().vp(p).scale(Fraction(p) ** (k - 1)))
    for n in range(1, trunc):
        lhs = fam.coeff_at_weight(n, k)
        rhs = ring.from_cyclotomic(stab.coeff(n)) if n in stab.coeffs else ring.zero
        if lhs != rhs:
            return False
    lhs_const = fam.constant_at_weight(k)
    rhs_const = PadicNum.from_fraction(p, prec, (1 - Fraction(p) ** (k - 1)) * zeta_neg(k))
    return lhs_const == rhs_const


def family_residue_report(N: int, p: int, prec: int = 10, t_order: int = 8, trunc: int = 30):
    """Residue data of the flat family at the trivial character: the
    constant term has residue 1 - 1/p, every non-constant coefficient is
    integral (hence has residue 0)."""
    fam = flat_family(N, p, prec, t_order)
    const = fam.constant_fraction(0)
    res = residue_at_trivial(const)
    # non-constant coefficients are residues in (Z/p^n)[x]/Phi_N, i.e.
    # integral by construction, so ell * coeff vanishes at T = 0
    integral = all(
        isinstance(c, CycloPadicElem)
        for n in range(1, trunc)
        for branch in range(p - 1)
        for c in fam.coeff_series(n, branch).coeffs)
    return {"constant_residue": res, "expected": Fraction(p - 1, p),
            "nonconstant_integral": integral}
