"""Eigenform data packets: ingestion, the Hecke prime-power recursion,
quadratic base change, and ideal-indexed coefficients.

Internal normalization is arithmetic (algebraic-integer eigenvalues); the
unitary rescaling a / n^(k-1) is applied only at series-evaluation time.
Primes dividing the level of the input form are carried with an
"unsupported" flag (no Euler data is guessed for them); a packet may carry
explicitly supplied degree-1 entries for bad primes when the eigenvalues
are known.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import DirichletCharacter, QuadCharacter, char_eval
from .numberfield import QQ, NumberField, NumberFieldElem
from .padic import PadicInt, hensel_lift_root


class SchemaError(ValueError):
    pass


class UnsupportedPrime(ValueError):
    pass


def primes_upto(n: int):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(n + 1) if sieve[i]]


def factorize(n: int):
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


def _coerce_to_field(K: NumberField, x):
    """Bring a value (rational / element of an equal field) into K."""
    if isinstance(x, (int, Fraction)):
        return K(x)
    if isinstance(x, NumberFieldElem):
        if x.field == K:
            return x
        if x.is_rational():
            return K(x.as_rational())
        raise SchemaError("value lies in an incompatible coefficient field")
    raise SchemaError(f"cannot coerce {x!r}")


def _enc_val(x) -> object:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _dec_val(v) -> Fraction:
    if isinstance(v, str):
        num, den = v.split("/")
        return Fraction(int(num), int(den))
    return Fraction(v)


def _enc_elem(x: NumberFieldElem):
    return [_enc_val(c) for c in x.coords]


class EllipticEigenPacket:
    def __init__(self, label, level, weight, character, field, cutoff, ap, warnings=None):
        self.label = label
        self.level = int(level)
        self.weight = int(weight)
        self.character = character
        self.field = field
        self.cutoff = int(cutoff)
        self.ap = dict(ap)
        self.warnings = list(warnings or [])
        if self.weight < 2:
            raise SchemaError("weight must be >= 2")
        for l in primes_upto(self.cutoff):
            if l not in self.ap:
                raise SchemaError(f"missing a_{l} below cutoff {self.cutoff}")

    def a(self, l: int) -> NumberFieldElem:
        if l not in self.ap:
            raise UnsupportedPrime(f"prime {l} beyond cutoff")
        return self.ap[l]

    def omega_value(self, l: int) -> NumberFieldElem:
        return _coerce_to_field(self.field, char_eval(self.character, l))

    def check_ramanujan(self, tol=1e-6):
        """Numeric |a_l| <= 2 l^((k-1)/2) at every embedding; returns the
        list of offending primes (reported as warnings by ingestion)."""
        bad = []
        roots = self.field.embeddings()
        for l, a in self.ap.items():
            if self.level % l == 0:
                continue
            bound = 2 * l ** ((self.weight - 1) / 2) * (1 + tol)
            if any(abs(a.embed(r)) > bound for r in roots):
                bad.append(l)
        return sorted(bad)

    def to_doc(self):
        return {
            "label": self.label,
            "type": "elliptic",
            "level": self.level,
            "weight": self.weight,
            "character": self.character.to_dict(),
            "field": {"min_poly": list(self.field.min_poly)},
            "cutoff": self.cutoff,
            "ap": {str(l): _enc_elem(a) for l, a in sorted(self.ap.items())},
        }


@dataclass
class PrimeEntry:
    split_type: str              # split | inert | ramified
    status: str                  # good | bad | unsupported
    a: tuple = ()                # one or two eigenvalues
    central: tuple = ()          # central character values, same length
    norm: int = 0                # residue norm of each prime above l

    def to_doc(self):
        d = {"split_type": self.split_type, "status": self.status}
        if self.status != "unsupported":
            d["a"] = [_enc_elem(x) for x in self.a]
            d["norm"] = self.norm
            if self.status == "good":
                d["central"] = [_enc_elem(x) for x in self.central]
        return d


class HilbertEigenPacket:
    def __init__(self, label, disc, level_norm, weight, omega_q, field, cutoff, primes, warnings=None):
        self.label = label
        self.disc = int(disc)
        self.level_norm = int(level_norm)
        self.weight = tuple(int(k) for k in weight)
        self.omega_q = omega_q
        self.field = field
        self.cutoff = int(cutoff)
        self.primes = dict(primes)
        self.warnings = list(warnings or [])
        if (self.weight[0] - self.weight[1]) % 2 != 0:
            raise SchemaError("weight pair must satisfy k1 = k2 mod 2")
        eta = QuadCharacter(self.disc)
        for l in primes_upto(self.cutoff):
            if l not in self.primes:
                raise SchemaError(f"missing prime entry for {l}")
            entry = self.primes[l]
            expected = {1: "split", -1: "inert", 0: "ramified"}[eta(l)]
            if entry.split_type != expected:
                raise SchemaError(f"prime {l}: split type {entry.split_type!r} but disc {self.disc} says {expected!r}")
            if entry.status != "unsupported":
                want = 2 if entry.split_type == "split" else 1
                if len(entry.a) != want:
                    raise SchemaError(f"prime {l}: expected {want} eigenvalue(s)")

    @property
    def parallel_weight(self) -> int:
        if self.weight[0] != self.weight[1]:
            raise ValueError("operation needs parallel weight")
        return self.weight[0]

    def entry(self, l: int) -> PrimeEntry:
        if l not in self.primes:
            raise UnsupportedPrime(f"prime {l} beyond cutoff")
        return self.primes[l]

    def with_bad_prime(self, l: int, eigenvalues) -> "HilbertEigenPacket":
        """Copy of the packet with an explicitly supplied degree-1 entry at
        a previously unsupported prime (for known newform data)."""
        old = self.entry(l)
        if old.status != "unsupported":
            raise ValueError(f"prime {l} is not flagged unsupported")
        ev = tuple(_coerce_to_field(self.field, x) for x in eigenvalues)
        want = 2 if old.split_type == "split" else 1
        if len(ev) != want:
            raise SchemaError(f"prime {l}: expected {want} eigenvalue(s)")
        primes = dict(self.primes)
        norm = l * l if old.split_type == "inert" else l
        primes[l] = PrimeEntry(old.split_type, "bad", ev, (), norm)
        return HilbertEigenPacket(
            self.label, self.disc, self.level_norm, self.weight, self.omega_q,
            self.field, self.cutoff, primes, self.warnings)

    def to_doc(self):
        return {
            "label": self.label,
            "type": "hilbert",
            "disc": self.disc,
            "level_norm": self.level_norm,
            "weight": list(self.weight),
            "character": self.omega_q.to_dict(),
            "field": {"min_poly": list(self.field.min_poly)},
            "cutoff": self.cutoff,
            "primes": {str(l): e.to_doc() for l, e in sorted(self.primes.items())},
        }


def ingest_packet(doc):
    """Validate a structured document and build the corresponding packet.

    Ramanujan-bound violations are recorded as warnings on the packet, not
    errors; schema problems raise SchemaError.
    """
    if not isinstance(doc, dict):
        raise SchemaError("document must be a mapping")
    for key in ("label", "type", "field", "cutoff", "character"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    try:
        K = NumberField(doc["field"]["min_poly"])
        chi = DirichletCharacter.from_dict(doc["character"])
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(str(e))
    if doc["type"] == "elliptic":
        try:
            ap = {int(l): K([_dec_val(c) for c in vec]) for l, vec in doc["ap"].items()}
            pkt = EllipticEigenPacket(doc["label"], doc["level"], doc["weight"], chi, K, doc["cutoff"], ap)
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, SchemaError):
                raise
            raise SchemaError(str(e))
        bad = pkt.check_ramanujan()
        if bad:
            pkt.warnings.append(f"ramanujan bound violated at primes {bad}")
        return pkt
    if doc["type"] == "hilbert":
        try:
            primes = {}
            for l, d in doc["primes"].items():
                status = d.get("status", "good")
                if status == "unsupported":
                    entry = PrimeEntry(d["split_type"], "unsupported")
                else:
                    a = tuple(K([_dec_val(c) for c in vec]) for vec in d["a"])
                    central = tuple(K([_dec_val(c) for c in vec]) for vec in d.get("central", []))
                    entry = PrimeEntry(d["split_type"], status, a, central, int(d["norm"]))
                primes[int(l)] = entry
            return HilbertEigenPacket(doc["label"], doc["disc"], doc["level_norm"],
                                      doc["weight"], chi, K, doc["cutoff"], primes)
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, SchemaError):
                raise
            raise SchemaError(str(e))
    raise SchemaError(f"unknown packet type {doc['type']!r}")


def hecke_prime_power(a, Nlam: int, k: int, omega_lam, r: int):
    """a_{lambda^r} from a_{lambda^(r+1)} = a * a_{lambda^r} -
    omega(lambda) Nlam^(k-1) a_{lambda^(r-1)}; omega_lam None means a
    degree-1 (bad) Euler factor, i.e. a_{lambda^r} = a^r."""
    if r < 0:
        raise ValueError("r must be >= 0")
    one = a.field.one if isinstance(a, NumberFieldElem) else Fraction(1)
    if r == 0:
        return one
    if omega_lam is None:
        return a ** r
    scale = omega_lam * Fraction(Nlam) ** (k - 1)
    prev, cur = one, a
    for _ in range(r - 1):
        prev, cur = cur, a * cur - scale * prev
    return cur


def base_change(pi: EllipticEigenPacket, D: int) -> HilbertEigenPacket:
    """Eigenvalue packet of the quadratic base change over the real field of
    discriminant D.  Primes dividing the level are flagged unsupported."""
    eta = QuadCharacter(D)
    k = pi.weight
    primes = {}
    for l in primes_upto(pi.cutoff):
        typ = {1: "split", -1: "inert", 0: "ramified"}[eta(l)]
        if pi.level % l == 0:
            primes[l] = PrimeEntry(typ, "unsupported")
            continue
        al = pi.a(l)
        w = pi.omega_value(l)
        if typ == "split":
            primes[l] = PrimeEntry("split", "good", (al, al), (w, w), l)
        elif typ == "inert":
            a_in = al * al - 2 * w * Fraction(l) ** (k - 1)
            primes[l] = PrimeEntry("inert", "good", (a_in,), (w * w,), l * l)
        else:
            primes[l] = PrimeEntry("ramified", "good", (al,), (w,), l)
    omega_q = pi.character ** 2
    return HilbertEigenPacket(
        label=f"bc({pi.label}, D={D})", disc=D, level_norm=pi.level ** 2,
        weight=(k, k), omega_q=omega_q, field=pi.field, cutoff=pi.cutoff,
        primes=primes, warnings=pi.warnings)


def ideal_coefficient(Pi: HilbertEigenPacket, n: int) -> NumberFieldElem:
    """a_{n O_F}: multiplicative over rational primes; split l^e contributes
    a_{lam^e} a_{lambar^e}, inert uses the norm-l^2 recursion, ramified the
    recursion at lambda with lambda^(2e)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = Pi.parallel_weight
    out = Pi.field.one
    for l, e in factorize(n):
        entry = Pi.entry(l)
        if entry.status == "unsupported":
            raise UnsupportedPrime(f"prime {l} divides the level; no Euler data")
        central = entry.central if entry.status == "good" else tuple(None for _ in entry.a)
        if entry.split_type == "split":
            out = out * hecke_prime_power(entry.a[0], l, k, central[0], e)
            out = out * hecke_prime_power(entry.a[1], l, k, central[1], e)
        elif entry.split_type == "inert":
            out = out * hecke_prime_power(entry.a[0], l * l, k, central[0], e)
        else:
            out = out * hecke_prime_power(entry.a[0], l, k, central[0], 2 * e)
    return out


def unitary_normalize(a, n: int, k: int):
    """a_{n O_F} / n^(k-1): exact in the coefficient field."""
    return a * Fraction(1, n ** (k - 1)) if n > 1 else a * Fraction(1)


def embed_to_padic(x, p: int, n: int, root=None) -> PadicInt:
    """Embed a coefficient-field element into Z/p^n.

    For a non-rational field an integer root of the minimal polynomial mod p
    must be declared; it is Hensel-lifted and the power basis is evaluated
    there.  This is the 'fixed embedding' every p-adic computation records.
    """
    if isinstance(x, (int, Fraction)):
        return PadicInt.from_fraction(p, n, x)
    if x.is_rational():
        return PadicInt.from_fraction(p, n, x.as_rational())
    if root is None:
        raise ValueError("embedding root required for a non-rational field")
    r = hensel_lift_root(list(x.field.min_poly), p, n, root)
    acc = PadicInt(p, n, 0)
    for c in reversed(x.coords):
        acc = acc * r + PadicInt.from_fraction(p, n, c)
    return acc


class FamilyStub:
    """Classical-weight eigenvalue table standing in for an ordinary family
    at a split prime: rows m -> (a_{p1}(m), a_{p2}(m), central values) at
    weights (k + 2m, k)."""

    def __init__(self, p, disc, weight, rows, field=None, embedding_root=None, label="stub"):
        self.p = int(p)
        self.disc = int(disc)
        self.weight = int(weight)
        self.field = field or QQ
        self.embedding_root = embedding_root
        self.label = label
        eta = QuadCharacter(self.disc)
        if eta(self.p) != 1:
            raise SchemaError(f"p = {p} is not split in the field of discriminant {disc}")
        self.rows = {}
        for row in rows:
            m = int(row["m"])
            vals = {}
            for key in ("ap1", "ap2", "central1", "central2"):
                vals[key] = _coerce_to_field(self.field, _dec_elem_or_val(self.field, row[key]))
            self.rows[m] = vals
        # ordinarity at p1 for every listed row
        for m, vals in self.rows.items():
            a1 = embed_to_padic(vals["ap1"], self.p, 3, self.embedding_root)
            if not a1.is_unit():
                raise SchemaError(f"row m={m}: a_p1 is not a p-adic unit (not ordinary)")

    def row(self, m: int):
        if m not in self.rows:
            raise KeyError(f"no stub row at m={m}")
        return self.rows[m]

    def to_doc(self):
        return {
            "label": self.label,
            "p": self.p,
            "disc": self.disc,
            "weight": self.weight,
            "field": {"min_poly": list(self.field.min_poly)},
            "embedding_root": self.embedding_root,
            "rows": [
                {"m": m, **{key: _enc_elem(v) for key, v in vals.items()}}
                for m, vals in sorted(self.rows.items())
            ],
        }

    @classmethod
    def from_doc(cls, doc):
        try:
            K = NumberField(doc["field"]["min_poly"]) if "field" in doc else QQ
            return cls(doc["p"], doc["disc"], doc["weight"], doc["rows"],
                       field=K, embedding_root=doc.get("embedding_root"),
                       label=doc.get("label", "stub"))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, SchemaError):
                raise
            raise SchemaError(str(e))


def _dec_elem_or_val(K, v):
    if isinstance(v, list):
        return K([_dec_val(c) for c in v])
    return K(_dec_val(v))
