"""Stabilized Satake data along a family stub, the interpolation Euler
factor at the split prime, its flat/depleted bracket split, the
trivial-zero report, and the exact archimedean constant of the
interpolation formula.

The two p-adic L-functions themselves need a coherent-cohomology
functional that is out of scope; everything they are assembled from is
computed here, so the bracket identities and the trivial-zero criterion
are exercised at factor level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, pi

import sympy as sp

from .eigendata import FamilyStub, embed_to_padic
from .padic import NotOrdinary, PadicInt, PadicNum, hensel_cofactor
from .symbolic import SymbolicRationalFunction


@dataclass
class StabilizedParams:
    p: int
    m: int
    weight: int                 # base weight k; the row has weight (k+2m, k)
    alpha1: PadicInt            # unit root at p1
    beta1: PadicInt             # cofactor, v = k + 2m - 1
    alpha2: PadicInt            # unit root at p2
    beta2: PadicInt             # cofactor, v = k - 1
    structural_coincidence: bool  # alpha1 = alpha2 as exact field elements

    def valuations(self):
        return {"alpha1": self.alpha1.valuation(), "beta1": self.beta1.valuation(),
                "alpha2": self.alpha2.valuation(), "beta2": self.beta2.valuation()}


def stabilize(ap1, ap2, p: int, weights, central1, central2, n: int,
              embedding_root=None) -> StabilizedParams:
    """Unit roots and cofactors of the two Hecke quadratics
    X^2 - a_pi X + central_i p^(w_i - 1) at weights (k + 2m, k).

    alpha2 is the root congruent to a_p2 mod p (the unit root); a
    non-unit a_p2 is reported as non-ordinary at the second prime rather
    than repaired, since every in-scope datum is ordinary there.
    """
    k2m, k = weights
    if (k2m - k) % 2 != 0 or k2m < k:
        raise ValueError("weights must be (k + 2m, k) with m >= 0")
    m = (k2m - k) // 2
    a1 = embed_to_padic(ap1, p, n, embedding_root)
    a2 = embed_to_padic(ap2, p, n, embedding_root)
    c1 = embed_to_padic(central1, p, n, embedding_root)
    c2 = embed_to_padic(central2, p, n, embedding_root)
    if not a1.is_unit():
        raise NotOrdinary("a_p1 is not a unit: not ordinary at the first prime")
    if not a2.is_unit():
        raise NotOrdinary("a_p2 is not a unit: not ordinary at the second prime")
    alpha1, beta1 = hensel_cofactor(a1, c1 * PadicInt(p, n, p ** (k2m - 1)), p, n)
    alpha2, beta2 = hensel_cofactor(a2, c2 * PadicInt(p, n, p ** (k - 1)), p, n)
    structural = (m == 0 and _exact_eq(ap1, ap2) and _exact_eq(central1, central2))
    return StabilizedParams(p, m, k, alpha1, beta1, alpha2, beta2, structural)


def _exact_eq(x, y):
    return x == y


def bracket_split(s: StabilizedParams):
    """(flat_part, depleted_part):

    depleted_part = (1 - alpha2/alpha1)(1 - beta2/alpha1), the factor
    relating the two p-adic L-functions; flat_part =
    (1 - p^(2m-1) alpha2/alpha1)(1 - p^(2m-1) beta2/alpha1), the
    interpolation factor of the improved one.  At m = 0 the flat part
    involves 1/p and is returned as a p-adic number with (possibly)
    negative valuation."""
    p, m = s.p, s.m
    inv_a1 = PadicNum.from_padic_int(s.alpha1).inverse()
    r2 = PadicNum.from_padic_int(s.alpha2) * inv_a1
    q2 = PadicNum.from_padic_int(s.beta2) * inv_a1
    one = PadicNum(p, 0, PadicInt(p, s.alpha1.n, 1))
    if s.structural_coincidence:
        # alpha2 is the unit root of the *same* quadratic as alpha1, so
        # 1 - alpha2/alpha1 vanishes exactly, not just to precision
        depleted = PadicNum(p, 0, PadicInt(p, s.alpha1.n, 0))
        depleted_structural_zero = True
    else:
        depleted = (one - r2) * (one - q2)
        depleted_structural_zero = False
    pw = PadicNum(p, 2 * m - 1, PadicInt(p, s.alpha1.n, 1))
    flat = (one - pw * r2) * (one - pw * q2)
    return flat, depleted, depleted_structural_zero


def euler_Ep(s: StabilizedParams) -> PadicNum:
    """(1 - a2/a1)(1 - b2/a1)(1 - p^(2m-1) a2/a1)(1 - p^(2m-1) b2/a1),
    computed directly from the displayed product (not via bracket_split)."""
    p = s.p
    inv_a1 = PadicNum.from_padic_int(s.alpha1).inverse()
    r2 = PadicNum.from_padic_int(s.alpha2) * inv_a1
    q2 = PadicNum.from_padic_int(s.beta2) * inv_a1
    one = PadicNum(p, 0, PadicInt(p, s.alpha1.n, 1))
    pw = PadicNum(p, 2 * s.m - 1, PadicInt(p, s.alpha1.n, 1))
    if s.structural_coincidence:
        return PadicNum(p, 0, PadicInt(p, s.alpha1.n, 0))
    return (one - r2) * (one - q2) * (one - pw * r2) * (one - pw * q2)


def bracket_identity_symbolic() -> bool:
    """euler_Ep / flat_part = depleted_part as rational functions in the
    indeterminates alpha1, alpha2, beta2, P = p^(2m-1)."""
    a1, a2, b2, P = sp.symbols("a1 a2 b2 P")
    E = SymbolicRationalFunction((a1 - a2) * (a1 - b2) * (a1 - P * a2) * (a1 - P * b2), a1 ** 4)
    flat = SymbolicRationalFunction((a1 - P * a2) * (a1 - P * b2), a1 ** 2)
    depleted = SymbolicRationalFunction((a1 - a2) * (a1 - b2), a1 ** 2)
    return E / flat == depleted


def stabilize_row(stub: FamilyStub, m: int, n: int) -> StabilizedParams:
    row = stub.row(m)
    return stabilize(row["ap1"], row["ap2"], stub.p,
                     (stub.weight + 2 * m, stub.weight),
                     row["central1"], row["central2"], n,
                     embedding_root=stub.embedding_root)


def ep_table(stub: FamilyStub, n: int = 10):
    """Per-row report: valuations, bracket parts and the interpolation
    factor (digit strings for the CSV report)."""
    rows = []
    for m in sorted(stub.rows):
        s = stabilize_row(stub, m, n)
        flat, depleted, struct0 = bracket_split(s)
        ep = euler_Ep(s)
        rows.append({
            "m": m,
            "v_alpha1": s.alpha1.valuation(),
            "flat_part": _digits(flat),
            "depleted_part": "0 (structural)" if struct0 else _digits(depleted),
            "v_depleted": "inf" if struct0 else depleted.valuation(),
            "euler_Ep": _digits(ep),
        })
    return rows


def trivial_zero_detect(stub: FamilyStub, n: int = 10):
    """Report on the m = 0 row: the depleted bracket's valuation (infinite
    when the coincidence alpha1 = alpha2 holds structurally) and the
    forced-vanishing verdict when it is positive.

    Whether the vanishing order along the family can exceed 1 is not
    asserted: only the valuation at the specialization is reported.
    """
    if 0 not in stub.rows:
        raise ValueError("stub has no m = 0 row")
    s = stabilize_row(stub, 0, n)
    flat, depleted, struct0 = bracket_split(s)
    if struct0:
        v = "inf"
        forced = True
    else:
        v = depleted.valuation()
        forced = v > 0
    return {
        "label": stub.label,
        "p": stub.p,
        "v_depleted_at_0": v,
        "structural_zero": struct0,
        "verdict": ("forced vanishing of the two-variable function at (0, 1)"
                    if forced else "no forced vanishing"),
        "unit_at_precision": (not struct0) and v == 0,
        "precision": n,
    }


def _digits(x: PadicNum) -> str:
    y = x.normalized()
    if y.mant.value == 0:
        return f"0 + O({x.p}^{y.abs_prec})"
    return f"{y.mant.value}*{x.p}^{y.shift} + O({x.p}^{y.abs_prec})"


class InterpConstant:
    """Exact value r * pi^a * i^b with r a positive rational, b mod 4 (the
    sign of the value is folded into the i-power)."""

    def __init__(self, rational, pi_power: int, i_power: int):
        r = Fraction(rational)
        if r == 0:
            raise ValueError("constant cannot vanish")
        if r < 0:
            r, i_power = -r, i_power + 2
        self.rational = r
        self.pi_power = int(pi_power)
        self.i_power = i_power % 4

    def __mul__(self, other):
        return InterpConstant(self.rational * other.rational,
                              self.pi_power + other.pi_power,
                              self.i_power + other.i_power)

    def __eq__(self, other):
        return (self.rational, self.pi_power, self.i_power) == \
               (other.rational, other.pi_power, other.i_power)

    def complex_value(self) -> complex:
        return float(self.rational) * pi ** self.pi_power * 1j ** self.i_power

    def __repr__(self):
        return f"{self.rational} * pi^{self.pi_power} * i^{self.i_power}"


def interp_constant(k: int, m: int) -> InterpConstant:
    """(k-1)! / (2^(k+2m-2) i^(1-k-2m) (-2 pi i)^(k+1)) in exact
    (rational, pi-power, i-power) form."""
    if k < 2 or m < 0:
        raise ValueError("need k >= 2 and m >= 0")
    rational = Fraction(factorial(k - 1), 2 ** (2 * k + 2 * m - 1))
    pi_power = -(k + 1)
    # denominator carries i^(1-k-2m) * (-1)^(k+1) * i^(k+1) = i^(2k-2m+4)
    i_power = (2 * m - 2 * k) % 4
    return InterpConstant(rational, pi_power, i_power)
