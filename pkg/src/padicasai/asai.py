"""Twisted tensor and symmetric-square Euler factors, the factorization
checker for base-change packets, the imprimitive twisted Dirichlet series,
numeric evaluation with a fitted tail envelope, and the pole probe.

Everything is in the arithmetic normalization internally; series use the
unitary variable (pole at s = 1) through the exact shift a / n^(k-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .characters import DirichletCharacter, QuadCharacter, char_eval
from .eigendata import (
    EllipticEigenPacket,
    HilbertEigenPacket,
    UnsupportedPrime,
    _coerce_to_field,
    factorize,
    ideal_coefficient,
    primes_upto,
    unitary_normalize,
)


class BadPrime(ValueError):
    pass


class InsufficientCutoff(ValueError):
    pass


@dataclass
class EulerFactor:
    prime: int
    coeffs: list               # ascending in X = l^(-s), constant term 1
    tag: str                   # asai | sym2 | dirichlet | bad-omitted
    normalization: str = "arithmetic"

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def bad_omitted(self):
        return self.tag == "bad-omitted"

    def __mul__(self, other):
        if self.prime != other.prime:
            raise ValueError("mixed primes")
        out = [self.coeffs[0] * 0] * (self.degree + other.degree + 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return EulerFactor(self.prime, out, f"{self.tag}*{other.tag}")

    def __eq__(self, other):
        return (self.prime == other.prime and self.degree == other.degree
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def unitary_coeffs(self, k: int):
        """Coefficients after the Satake rescale by l^-(k-1) per degree."""
        l = self.prime
        return [c * Fraction(1, l ** (j * (k - 1))) for j, c in enumerate(self.coeffs)]


def _chi_value(chi, l, field):
    v = char_eval(chi, l)
    if v.is_zero():
        return None
    return _coerce_to_field(field, v)


def asai_euler_factor(Pi: HilbertEigenPacket, chi: DirichletCharacter, l: int) -> EulerFactor:
    """Degree-4 twisted tensor factor at a good prime l (unramified in the
    field, prime to the level and to the conductor of chi)."""
    entry = Pi.entry(l)
    K = Pi.field
    k = Pi.parallel_weight
    c = _chi_value(chi, l, K)
    if entry.status != "good" or entry.split_type == "ramified" or c is None:
        return EulerFactor(l, [K.one], "bad-omitted")
    if entry.split_type == "split":
        a1, a2 = entry.a
        c1 = entry.central[0] * Fraction(l) ** (k - 1)
        c2 = entry.central[1] * Fraction(l) ** (k - 1)
        e1 = a1 * a2
        e2 = c2 * a1 * a1 + c1 * a2 * a2 - 2 * c1 * c2
        e3 = c1 * c2 * e1
        e4 = (c1 * c2) ** 2
        coeffs = [K.one, -e1 * c, e2 * c * c, -e3 * c ** 3, e4 * c ** 4]
        return EulerFactor(l, coeffs, "asai")
    # inert: (1 - a chi X + cen chi^2 X^2)(1 - cen chi^2 X^2) with
    # a = a_{lO}, cen = central * norm^(k-1)
    a = entry.a[0]
    cen = entry.central[0] * Fraction(l) ** (2 * (k - 1))
    coeffs = [K.one, -a * c, K.zero, a * cen * c ** 3, -(cen * cen) * c ** 4]
    return EulerFactor(l, coeffs, "asai")


def sym2_euler_factor(pi: EllipticEigenPacket, chi: DirichletCharacter, l: int) -> EulerFactor:
    """(1 - alpha^2 chi X)(1 - alpha beta chi X)(1 - beta^2 chi X) expanded
    in a_l and omega(l) l^(k-1)."""
    K = pi.field
    c = _chi_value(chi, l, K)
    if pi.level % l == 0 or c is None:
        return EulerFactor(l, [K.one], "bad-omitted")
    a = pi.a(l)
    b = pi.omega_value(l) * Fraction(l) ** (pi.weight - 1)
    e1 = a * a - b
    e2 = b * e1
    e3 = b ** 3
    return EulerFactor(l, [K.one, -e1 * c, e2 * c * c, -e3 * c ** 3], "sym2")


def dirichlet_euler_factor(pi: EllipticEigenPacket, D: int, chi: DirichletCharacter, l: int) -> EulerFactor:
    """(1 - chi(l) eta(l) omega(l) l^(k-1) X)."""
    K = pi.field
    c = _chi_value(chi, l, K)
    eta = QuadCharacter(D)
    if pi.level % l == 0 or c is None or eta(l) == 0:
        return EulerFactor(l, [K.one], "bad-omitted")
    val = c * eta(l) * pi.omega_value(l) * Fraction(l) ** (pi.weight - 1)
    return EulerFactor(l, [K.one, -val], "dirichlet")


def factorization_check(pi: EllipticEigenPacket, D: int, chi: DirichletCharacter,
                        l: int, bc: HilbertEigenPacket | None = None) -> bool:
    """Exact polynomial identity: Asai factor of the base change equals the
    symmetric-square factor times the degree-1 Dirichlet factor."""
    eta = QuadCharacter(D)
    if pi.level % l == 0 or eta(l) == 0 or _chi_value(chi, l, pi.field) is None:
        raise BadPrime(f"l = {l} is not good for this configuration")
    if bc is None:
        from .eigendata import base_change
        bc = base_change(pi, D)
    lhs = asai_euler_factor(bc, chi, l)
    rhs = sym2_euler_factor(pi, chi, l) * dirichlet_euler_factor(pi, D, chi, l)
    return lhs.coeffs == rhs.coeffs and not lhs.bad_omitted


def factorization_suite(pi, D, chi, lmax, bc=None):
    """Rows (l, split type, match flag or None when skipped) for all primes
    l <= lmax, plus the polynomials for reporting."""
    from .eigendata import base_change
    eta = QuadCharacter(D)
    if bc is None:
        bc = base_change(pi, D)
    rows = []
    for l in primes_upto(lmax):
        typ = {1: "split", -1: "inert", 0: "ramified"}[eta(l)]
        try:
            ok = factorization_check(pi, D, chi, l, bc=bc)
            rows.append({
                "l": l, "split_type": typ, "match": ok,
                "asai": asai_euler_factor(bc, chi, l).coeffs,
                "sym2": sym2_euler_factor(pi, chi, l).coeffs,
                "dirichlet": dirichlet_euler_factor(pi, D, chi, l).coeffs,
            })
        except BadPrime:
            rows.append({"l": l, "split_type": typ, "match": None,
                         "asai": None, "sym2": None, "dirichlet": None})
    return rows


class DirichletCoeffSeq:
    """Exact Dirichlet coefficients b_1..b_cutoff over a coefficient field
    (index 0 unused)."""

    def __init__(self, cutoff, values, provenance, field=None, label=""):
        self.cutoff = int(cutoff)
        self.values = list(values)
        if len(self.values) != self.cutoff + 1:
            raise ValueError("need cutoff + 1 slots (index 0 unused)")
        self.provenance = provenance
        self.field = field
        self.label = label
        if provenance == "euler-product" and not _val_eq_one(self.values[1]):
            raise ValueError("b_1 must be 1 for euler-product provenance")

    @classmethod
    def ones(cls, cutoff):
        return cls(cutoff, [Fraction(0)] + [Fraction(1)] * cutoff, "euler-product", label="zeta")

    def __getitem__(self, n):
        return self.values[n]

    def embed(self, root=None) -> np.ndarray:
        """Real coefficient array under a complex embedding of the field."""
        out = np.zeros(self.cutoff + 1)
        for n in range(1, self.cutoff + 1):
            v = self.values[n]
            if isinstance(v, (int, Fraction)):
                out[n] = float(v)
                continue
            if v.is_rational():
                out[n] = float(v.as_rational())
                continue
            if root is None:
                root = self.field.embeddings()[0]
            z = v.embed(root)
            if abs(z.imag) > 1e-6 * (1 + abs(z.real)):
                raise ValueError(f"coefficient b_{n} is not real under this embedding")
            out[n] = z.real
        return out


def _val_eq_one(v):
    if isinstance(v, (int, Fraction)):
        return v == 1
    return v.is_rational() and v.as_rational() == 1


def imprimitive_asai_coeffs(Pi: HilbertEigenPacket, chi: DirichletCharacter, cutoff: int) -> DirichletCoeffSeq:
    """Dirichlet coefficients of
    L_{N_chi Nm(level)}(chi^2 omega|_Q, 2s) * sum_{(n, N_chi)=1} a0_{nO} chi(n) n^-s,
    exact in the coefficient field; the prefactor lands on square indices."""
    K = Pi.field
    k = Pi.parallel_weight
    chi_p = chi.primitive()
    n_chi = chi_p.modulus
    m_omit = n_chi * Pi.level_norm
    theta = ((chi * chi) * Pi.omega_q).primitive()

    # multiplicative assembly of s_n = a0_{nO} chi(n) over prime powers
    spf = _smallest_prime_factor(cutoff)
    s = [K.zero] * (cutoff + 1)
    s[1] = K.one
    ppow = {}
    for l in primes_upto(cutoff):
        if n_chi % l == 0:
            continue
        cv = _chi_value(chi_p, l, K)
        vals = [K.one]
        e, q = 1, l
        while q <= cutoff:
            a = unitary_normalize(ideal_coefficient(Pi, q), q, k)
            vals.append(a * cv ** e)
            e += 1
            q *= l
        ppow[l] = vals
    for n in range(2, cutoff + 1):
        l = spf[n]
        if gcd(l, n_chi) != 1:
            continue  # chi(n) = 0
        e, m = 0, n
        while m % l == 0:
            m //= l
            e += 1
        if gcd(m, n_chi) != 1:
            continue
        s[n] = s[m] * ppow[l][e]

    # convolve with the prefactor on square indices
    b = [K.zero] * (cutoff + 1)
    d = 1
    while d * d <= cutoff:
        if gcd(d, m_omit) == 1:
            tv = _chi_value(theta, d, K) if d > 1 else K.one
            if tv is not None:
                dd = d * d
                for n in range(dd, cutoff + 1, dd):
                    if not s[n // dd].is_zero():
                        b[n] = b[n] + tv * s[n // dd]
        d += 1
    return DirichletCoeffSeq(cutoff, b, "imprimitive-definition", field=K,
                             label=f"imp-asai({Pi.label}, chi mod {chi.modulus})")


def euler_product_coeffs(Pi: HilbertEigenPacket, chi: DirichletCharacter, cutoff: int) -> DirichletCoeffSeq:
    """Expansion of the product of the good unitary Asai Euler factors up to
    the cutoff (independent route; coefficients vanish off good-supported
    indices)."""
    K = Pi.field
    k = Pi.parallel_weight
    spf = _smallest_prime_factor(cutoff)
    ppow = {}
    for l in primes_upto(cutoff):
        f = asai_euler_factor(Pi, chi, l)
        if f.bad_omitted:
            continue
        uc = f.unitary_coeffs(k)
        depth = 1
        while l ** depth <= cutoff:
            depth += 1
        inv = [K.one]
        for e in range(1, depth):
            acc = K.zero
            for j in range(1, min(e, 4) + 1):
                acc = acc + uc[j] * inv[e - j]
            inv.append(-acc)
        ppow[l] = inv
    b = [K.zero] * (cutoff + 1)
    b[1] = K.one
    for n in range(2, cutoff + 1):
        l = spf[n]
        if l not in ppow:
            continue
        e, m = 0, n
        while m % l == 0:
            m //= l
            e += 1
        b[n] = b[m] * ppow[l][e]
    return DirichletCoeffSeq(cutoff, b, "euler-product", field=K)


def _smallest_prime_factor(n: int):
    spf = list(range(n + 1))
    for i in range(2, int(n ** 0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


@dataclass
class LSeriesValue:
    lo: float
    hi: float
    partial: float
    tail: float
    theta: float
    envelope: float

    @property
    def mid(self):
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, x):
        return self.lo <= x <= self.hi


def lseries_eval(seq, s: float, embedding=None, _embedded=None) -> LSeriesValue:
    """Partial sum to the cutoff plus a tail bound from the fitted envelope
    |b_n| <= C n^theta (theta fitted on dyadic blocks of the computed
    coefficients, so the bound is rigorous conditionally on the envelope
    persisting past the cutoff)."""
    if not s > 1:
        raise ValueError("evaluation requires s > 1")
    v = _embedded if _embedded is not None else (
        seq if isinstance(seq, np.ndarray) else seq.embed(embedding))
    cutoff = len(v) - 1
    n = np.arange(1, cutoff + 1, dtype=float)
    partial = float(np.dot(v[1:], n ** (-s)))
    theta, C = _envelope_fit(v)
    if s - theta <= 1.0:
        raise InsufficientCutoff(
            f"tail bound diverges: s = {s}, fitted envelope exponent {theta:.3f}")
    tail = C * (cutoff ** (theta + 1 - s) / (s - 1 - theta) + cutoff ** (theta - s))
    return LSeriesValue(partial - tail, partial + tail, partial, tail, theta, C)


def _envelope_fit(v: np.ndarray):
    """theta from the slope of dyadic block means (typical growth; divisor
    spikes would badly overstate the asymptotic exponent), C as the max
    ratio so that |b_n| <= C n^theta holds on the whole computed range."""
    absv = np.abs(v[1:])
    cutoff = len(absv)
    nblocks = min(10, max(2, cutoff // 4))
    edges = np.unique(np.geomspace(1, cutoff, nblocks + 1).astype(int))
    xs, ys = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        block = absv[a - 1: b]
        m = float(block.mean()) if len(block) else 0.0
        if m > 0:
            xs.append(math.log(0.5 * (a + b)))
            ys.append(math.log(m))
    if len(xs) < 2:
        theta = 0.0
    else:
        theta = float(np.polyfit(xs, ys, 1)[0])
    theta = max(0.0, theta)
    n = np.arange(1, cutoff + 1, dtype=float)
    with np.errstate(divide="ignore"):
        C = float(np.max(absv / n ** theta)) if absv.max() > 0 else 0.0
    return theta, C


def pole_probe(seq, grid=None, embedding=None, refinements=2, shrink=0.85,
               stability_tol=0.25, noise_floor=0.08):
    """Fit value(1 + eps) = c * phi(eps) + d over the grid, where phi is the
    all-ones partial sum at the same cutoff (the truncation-corrected 1/eps
    basis).  Verdict 'pole' if c is stable across grid refinements and
    clears the noise floor, 'bounded' if the refined c estimates sink below
    the floor, else 'inconclusive'."""
    if grid is None:
        grid = [0.8, 0.65, 0.5, 0.4, 0.32, 0.25]
    grid = sorted(grid, reverse=True)
    if any(e <= 0 for e in grid):
        raise ValueError("grid must be positive")
    v = seq if isinstance(seq, np.ndarray) else seq.embed(embedding)
    cutoff = len(v) - 1
    n = np.arange(1, cutoff + 1, dtype=float)

    def fit(g):
        vals, phis = [], []
        for eps in g:
            try:
                val = lseries_eval(None, 1 + eps, _embedded=v)
            except InsufficientCutoff:
                continue  # this eps is too close to 1 for the cutoff
            vals.append(val.partial)
            phis.append(float(np.sum(n ** (-1 - eps))))
        if len(vals) < 3:
            raise InsufficientCutoff(
                "fewer than 3 grid points survive the tail gate; increase the cutoff")
        A = np.vstack([phis, np.ones(len(vals))]).T
        (c, d), *_ = np.linalg.lstsq(A, np.array(vals), rcond=None)
        return float(c), float(d), vals

    cs, ds, traces = [], [], []
    g = list(grid)
    for _ in range(refinements + 1):
        c, d, vals = fit(g)
        cs.append(c)
        ds.append(d)
        traces.append({"grid": list(g), "values": vals, "c": c, "d": d})
        g = [e * shrink for e in g]

    c_final = cs[-1]
    spread = max(abs(a - b) for a in cs for b in cs)
    scale = max(abs(c_final), noise_floor)
    stable = spread <= stability_tol * scale
    if stable and abs(c_final) >= noise_floor:
        verdict = "pole"
    elif all(abs(c) < noise_floor for c in cs[-2:]):
        verdict = "bounded"
    elif stable:
        verdict = "bounded"
    else:
        verdict = "inconclusive"
    return {
        "residue_estimate": c_final,
        "constant_estimate": ds[-1],
        "c_estimates": cs,
        "stability": spread / scale if scale else 0.0,
        "verdict": verdict,
        "cutoff": cutoff,
        "traces": traces,
    }


def distinguished_character(pi: EllipticEigenPacket, D: int) -> DirichletCharacter:
    """chi = eta_F * omega^(-1): the character for which the base change is
    always distinguished."""
    eta = QuadCharacter(D).as_dirichlet()
    return eta * pi.character.inverse()
