"""Exactly computable eigenform data used by the test and acceptance
suites: the weight-12 level-1 cusp form from its product formula, the
weight-3 level-16 eta power (CM by the Gaussian field, nebentypus the
quadratic character mod 4), and the twist of the weight-12 form by an
order-4 character mod 5 (nebentypus the quadratic character mod 5).

Integer q-expansions are multiplied by Kronecker substitution: pack the
coefficients into one big integer and let CPython's subquadratic integer
multiplication do the work.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .characters import DirichletCharacter
from .eigendata import ingest_packet, primes_upto
from .numberfield import cyclotomic_field


def intpoly_mul(a, b, trunc=None):
    """Product of integer coefficient lists, truncated to length trunc."""
    if trunc is not None:
        a = a[:trunc]
        b = b[:trunc]
    if not a or not b:
        return []
    amax = max(abs(x) for x in a)
    bmax = max(abs(x) for x in b)
    bound = 2 * amax * bmax * min(len(a), len(b)) + 1
    B = bound.bit_length() + 1
    base = 1 << B
    pa = sum(x << (B * i) for i, x in enumerate(a))
    pb = sum(x << (B * i) for i, x in enumerate(b))
    prod = pa * pb
    out_len = len(a) + len(b) - 1 if trunc is None else min(trunc, len(a) + len(b) - 1)
    out = []
    for _ in range(out_len):
        d = prod & (base - 1)
        if d >= base >> 1:
            d -= base
        prod = (prod - d) >> B
        out.append(d)
    return out


def eta_cubed(trunc: int):
    """Coefficients of prod (1-q^n)^3 = sum (-1)^k (2k+1) q^(k(k+1)/2)."""
    out = [0] * trunc
    k = 0
    while k * (k + 1) // 2 < trunc:
        out[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return out


@lru_cache(maxsize=8)
def _delta_qexp_cached(trunc: int):
    e3 = eta_cubed(trunc)
    e6 = intpoly_mul(e3, e3, trunc)
    e12 = intpoly_mul(e6, e6, trunc)
    e24 = intpoly_mul(e12, e12, trunc)
    return tuple([0] + e24[: trunc - 1])


def delta_qexp(trunc: int):
    """Coefficients of q prod (1-q^n)^24 up to (not including) q^trunc."""
    return list(_delta_qexp_cached(trunc))


def eta4_6_qexp(trunc: int):
    """Coefficients of q prod (1-q^(4n))^6: the weight-3 level-16 newform
    with nebentypus the quadratic character mod 4 (CM by Q(i))."""
    e3 = eta_cubed((trunc + 3) // 4 + 1)
    e3_q4 = [0] * trunc
    for i, c in enumerate(e3):
        if 4 * i < trunc and c:
            e3_q4[4 * i] = c
    e6 = intpoly_mul(e3_q4, e3_q4, trunc)
    return [0] + e6[: trunc - 1]


def delta_packet_doc(cutoff: int = 1000):
    """Ingestion document for the weight-12 level-1 form."""
    qexp = delta_qexp(cutoff + 1)
    return {
        "label": "wt12-level1",
        "type": "elliptic",
        "level": 1,
        "weight": 12,
        "character": {"modulus": 1, "exponents": [], "order": 1},
        "field": {"min_poly": [0, 1]},
        "cutoff": cutoff,
        "ap": {str(l): [qexp[l]] for l in primes_upto(cutoff)},
    }


def eta4_6_packet_doc(cutoff: int = 1000):
    """Ingestion document for the weight-3 level-16 form (nebentypus mod 4)."""
    qexp = eta4_6_qexp(cutoff + 1)
    return {
        "label": "wt3-level16",
        "type": "elliptic",
        "level": 16,
        "weight": 3,
        "character": {"modulus": 4, "exponents": [1], "order": 2},
        "field": {"min_poly": [0, 1]},
        "cutoff": cutoff,
        "ap": {str(l): [qexp[l]] for l in primes_upto(cutoff)},
    }


def delta_twist5_packet_doc(cutoff: int = 1000):
    """Twist of the weight-12 form by an order-4 character mod 5: a newform
    of level 25, weight 12, nebentypus the quadratic character mod 5, with
    coefficients in the Gaussian field.  a_5 = 0 (the twisting character is
    ramified there)."""
    chi = DirichletCharacter(5, [1])     # chi(2) = i, order 4
    qexp = delta_qexp(cutoff + 1)
    K = cyclotomic_field(4)
    ap = {}
    for l in primes_upto(cutoff):
        r = chi.value_exponent(l)
        if r is None:
            ap[str(l)] = [0, 0]
            continue
        val = K.gen ** int(r * 4) * qexp[l]
        ap[str(l)] = [_int_or_str(c) for c in val.coords]
    return {
        "label": "wt12-level25-twist5",
        "type": "elliptic",
        "level": 25,
        "weight": 12,
        "character": {"modulus": 5, "exponents": [2], "order": 2},
        "field": {"min_poly": [1, 0, 1]},
        "cutoff": cutoff,
        "ap": ap,
    }


def _int_or_str(c):
    f = Fraction(c)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def delta_packet(cutoff: int = 1000):
    return ingest_packet(delta_packet_doc(cutoff))


def eta4_6_packet(cutoff: int = 1000):
    return ingest_packet(eta4_6_packet_doc(cutoff))


def delta_twist5_packet(cutoff: int = 1000):
    return ingest_packet(delta_twist5_packet_doc(cutoff))


def stub_trivial_character_doc(p: int = 11, disc: int = 5, weight: int = 12, mmax: int = 3):
    """Family stub through the base change of the weight-12 level-1 form at
    an ordinary split prime: the m = 0 row is the honest base-change datum
    (both primes above p carry the same eigenvalue), higher rows are
    synthetic classical-weight entries chosen ordinary at p1 and with
    a_p2 distinct from a_p1 mod p."""
    ap = delta_qexp(p + 1)[p]
    rows = [{"m": 0, "ap1": ap, "ap2": ap, "central1": 1, "central2": 1}]
    for m in range(1, mmax + 1):
        rows.append({
            "m": m,
            "ap1": ap + p * m,
            "ap2": ap + m,          # != ap1 mod p for 0 < m < p
            "central1": 1,
            "central2": 1,
        })
    return {"label": f"stub-bc-wt12-p{p}", "p": p, "disc": disc, "weight": weight,
            "field": {"min_poly": [0, 1]}, "embedding_root": None, "rows": rows}


def stub_eta_nebentypus_doc(p: int = 11, disc: int = 5, weight: int = 12, mmax: int = 3):
    """Synthetic stub modelling a distinguished configuration (nebentypus
    equal to the quadratic character of the field): all rows, including
    m = 0, have a_p2 distinct from a_p1 mod p, so no interpolation bracket
    is forced to vanish."""
    ap = delta_qexp(p + 1)[p]
    rows = []
    for m in range(0, mmax + 1):
        rows.append({
            "m": m,
            "ap1": ap + p * m,
            "ap2": ap + m + 1,      # != ap1 mod p for 0 <= m < p - 1
            "central1": 1,
            "central2": 1,
        })
    return {"label": f"stub-neb-wt12-p{p}", "p": p, "disc": disc, "weight": weight,
            "field": {"min_poly": [0, 1]}, "embedding_root": None, "rows": rows}
