import random
from fractions import Fraction
from math import gcd

import pytest

from padicasai.characters import QuadCharacter
from padicasai.eigendata import (
    FamilyStub,
    SchemaError,
    UnsupportedPrime,
    base_change,
    embed_to_padic,
    hecke_prime_power,
    ideal_coefficient,
    ingest_packet,
    primes_upto,
    unitary_normalize,
)
from padicasai.formdata import (
    delta_packet,
    delta_packet_doc,
    delta_qexp,
    delta_twist5_packet,
    eta4_6_packet,
    eta4_6_qexp,
    stub_eta_nebentypus_doc,
    stub_trivial_character_doc,
)
from padicasai.numberfield import QQ


def test_ingest_minimal_document():
    # oracle: a_2 of the weight-12 level-1 form from expanding the product
    # formula q * prod(1-q^n)^24 to q^3 by hand
    prod = [1]
    for n in (1, 2):
        nxt = [0] * 3
        for i, c in enumerate(prod):
            if i < 3:
                nxt[i] += c
            if i + n < 3:
                nxt[i + n] -= c
        prod = nxt
    p24 = [1]
    for _ in range(24):
        nxt = [0] * 3
        for i, c in enumerate(p24):
            for j, d in enumerate(prod):
                if i + j < 3:
                    nxt[i + j] += c * d
        p24 = nxt
    a2_oracle = p24[1]
    assert a2_oracle == -24

    doc = delta_packet_doc(10)
    pkt = ingest_packet(doc)
    assert pkt.a(2).as_rational() == a2_oracle
    assert pkt.warnings == []


def test_ingest_missing_prime():
    doc = delta_packet_doc(10)
    del doc["ap"]["3"]
    with pytest.raises(SchemaError):
        ingest_packet(doc)


def test_ingest_hilbert_roundtrip():
    bc = base_change(delta_packet(50), 5)
    doc = bc.to_doc()
    again = ingest_packet(doc)
    for l in primes_upto(50):
        e1, e2 = bc.entry(l), again.entry(l)
        assert e1.split_type == e2.split_type and e1.a == e2.a


def test_ramanujan_warning_flag():
    doc = delta_packet_doc(10)
    doc["ap"]["7"] = [10 ** 9]  # way past 2*7^(11/2)
    pkt = ingest_packet(doc)
    assert any("ramanujan" in w for w in pkt.warnings)


def test_hecke_prime_power():
    pkt = delta_packet(20)
    a2 = pkt.a(2)
    one = QQ.one
    assert hecke_prime_power(a2, 2, 12, one, 0) == 1
    assert hecke_prime_power(a2, 2, 12, one, 1) == a2
    # (-24)^2 - 2^11 = -1472; oracle: coefficient of q^4 in the expansion
    val = hecke_prime_power(a2, 2, 12, one, 2)
    assert val.as_rational() == -1472
    assert delta_qexp(5)[4] == -1472
    # r = 3 against tau(8)
    assert hecke_prime_power(a2, 2, 12, one, 3).as_rational() == delta_qexp(9)[8]


def test_eigenform_multiplicativity_of_qexp():
    # sanity that the generated expansions really are Hecke eigenforms
    tau = delta_qexp(200)
    for m in (2, 3, 5):
        for n in (3, 5, 7):
            if gcd(m, n) == 1 and m * n < 200:
                assert tau[m * n] == tau[m] * tau[n]
    eta = eta4_6_qexp(500)
    for (m, n) in ((5, 9), (5, 13), (9, 13), (5, 17)):
        assert eta[m * n] == eta[m] * eta[n]
    # Hecke relation at p=5 for the weight-3 form, nebentypus value -1...
    # chi(5) = 0? no: chi mod 4 at 5 = 1; a_25 = a_5^2 - chi(5) * 5^2
    assert eta[25] == eta[5] ** 2 - 1 * 25


def test_base_change_inert_value():
    bc = base_change(delta_packet(20), 5)
    # 2 is inert in disc 5: a = tau(2)^2 - 2*2^11 = -3520
    assert bc.entry(2).a[0].as_rational() == -3520
    assert bc.entry(2).norm == 4
    # 11 = 1 mod 5 splits
    assert bc.entry(11).split_type == "split"
    assert bc.entry(11).a[0].as_rational() == delta_qexp(12)[11]
    # 5 ramifies, carries a_5 itself
    assert bc.entry(5).split_type == "ramified"
    assert bc.entry(5).a[0].as_rational() == 4830


def _degree4_oracle(pi, D, l):
    """det(1 - Frob X) of the base change at unramified l as the product of
    the degree-2 factors of pi and its quadratic twist, built directly from
    the eigenvalue table (independent of base_change)."""
    eta = QuadCharacter(D)
    a = pi.a(l).as_rational() if pi.a(l).is_rational() else pi.a(l)
    w = pi.omega_value(l)
    s = Fraction(l) ** (pi.weight - 1)
    # [1, -a, w*s] convolved with [1, -eta(l)*a, w*s] (twist central value
    # picks up eta^2 = 1)
    e = eta(l)
    f1 = [QQ.one * 1, -1 * pi.a(l), w * s]
    f2 = [QQ.one * 1, -e * pi.a(l), (w * s) * 1]
    out = [QQ.zero] * 5
    for i, x in enumerate(f1):
        for j, y in enumerate(f2):
            out[i + j] = out[i + j] + x * y
    return out


def _bc_degree4(bc, l):
    """Degree-4 polynomial of the base change at unramified l from the
    Hilbert packet data."""
    entry = bc.entry(l)
    k = bc.parallel_weight
    if entry.split_type == "split":
        out = [bc.field.zero] * 5
        f1 = [bc.field.one, -1 * entry.a[0], entry.central[0] * Fraction(l) ** (k - 1)]
        f2 = [bc.field.one, -1 * entry.a[1], entry.central[1] * Fraction(l) ** (k - 1)]
        for i, x in enumerate(f1):
            for j, y in enumerate(f2):
                out[i + j] = out[i + j] + x * y
        return out
    # inert: 1 - a X^2 + central * l^(2(k-1)) X^4
    return [bc.field.one, bc.field.zero, -1 * entry.a[0], bc.field.zero,
            entry.central[0] * Fraction(l) ** (2 * (k - 1))]


def test_degree4_factorization_invariant():
    for pkt, D in ((delta_packet(60), 5), (eta4_6_packet(60), 5), (delta_packet(60), 8)):
        for l in primes_upto(60):
            if pkt.level % l == 0 or D % l == 0:
                continue
            assert _bc_degree4(base_change(pkt, D), l) == _degree4_oracle(pkt, D, l), (pkt.label, D, l)


def test_ramified_degree2_check():
    # at l | D, l not dividing N: the base-change factor at lambda equals
    # the degree-2 factor of pi (the twisted factor is 1 there)
    pi = delta_packet(20)
    bc = base_change(pi, 5)
    e = bc.entry(5)
    assert e.a[0] == pi.a(5) and e.central[0] == pi.omega_value(5)


def test_ideal_coefficient_multiplicativity():
    bc = base_change(delta_packet(60), 5)
    assert ideal_coefficient(bc, 1) == 1
    assert ideal_coefficient(bc, 2).as_rational() == -3520
    rng = random.Random(17)
    pairs = [(2, 3), (4, 11), (6, 49), (9, 22)]
    for m, n in pairs:
        assert ideal_coefficient(bc, m * n) == ideal_coefficient(bc, m) * ideal_coefficient(bc, n)


def test_unsupported_bad_prime():
    bc = base_change(delta_twist5_packet(30), 5)
    assert bc.entry(5).status == "unsupported"
    with pytest.raises(UnsupportedPrime):
        ideal_coefficient(bc, 5)
    fixed = bc.with_bad_prime(5, [0])
    assert ideal_coefficient(fixed, 5).is_zero()
    assert ideal_coefficient(fixed, 10).is_zero()


def test_unitary_normalize():
    bc = base_change(delta_packet(20), 5)
    a = ideal_coefficient(bc, 2)
    assert unitary_normalize(a, 2, 12).as_rational() == Fraction(-55, 32)
    assert unitary_normalize(bc.field.one, 1, 12) == 1
    # multiplicativity is preserved by the exact shift on coprime indices
    a6 = unitary_normalize(ideal_coefficient(bc, 6), 6, 12)
    a2 = unitary_normalize(ideal_coefficient(bc, 2), 2, 12)
    a3 = unitary_normalize(ideal_coefficient(bc, 3), 3, 12)
    assert a6 == a2 * a3


def test_twist_packet_structure():
    pkt = delta_twist5_packet(60)
    tau = delta_qexp(61)
    assert pkt.character.order == 2  # nebentypus is the quadratic character
    for l in primes_upto(60):
        if l == 5:
            assert pkt.a(l).is_zero()
            continue
        a = pkt.a(l)
        # |a_l|^2 = tau(l)^2 and a_l^4 rational
        sq = a * a
        quad = QuadCharacter(5)
        assert sq == quad(l) * Fraction(tau[l]) ** 2


def test_family_stub_ordinarity_and_errors():
    stub = FamilyStub.from_doc(stub_trivial_character_doc())
    assert stub.row(0)["ap1"] == stub.row(0)["ap2"]
    stub2 = FamilyStub.from_doc(stub_eta_nebentypus_doc())
    assert stub2.row(0)["ap1"] != stub2.row(0)["ap2"]
    doc = stub_trivial_character_doc()
    doc["rows"][1]["ap1"] = 11  # not a unit at p=11
    with pytest.raises(SchemaError):
        FamilyStub.from_doc(doc)
    doc = stub_trivial_character_doc()
    doc["p"] = 7  # 7 is inert in disc 5
    with pytest.raises(SchemaError):
        FamilyStub.from_doc(doc)


def test_embed_to_padic():
    pkt = delta_twist5_packet(20)
    a3 = pkt.a(3)
    # the embedding is a ring homomorphism and sends i to a lifted root of
    # x^2 + 1 mod 5^6 (declared root 2 mod 5)
    v = embed_to_padic(a3, 5, 6, root=2)
    i_emb = embed_to_padic(pkt.field.gen, 5, 6, root=2)
    assert i_emb * i_emb == -1
    assert i_emb.value % 5 == 2
    assert v * v == embed_to_padic(a3 * a3, 5, 6, root=2)
    assert embed_to_padic(QQ(Fraction(1, 7)), 5, 4) * 7 == 1
