"""Acceptance criteria, each at its stated tolerance."""

from __future__ import annotations

import random
import time
from math import comb

import pytest

from lscat import catalog
from lscat.algebra import Algebra
from lscat.coalgebra import (
    BarComplex,
    CobarComplex,
    Coalgebra,
    Cofactor,
    apply_differentials,
    bar_homology,
    cobar_homology,
    collapse_check,
    compare_dims,
    divided_power_product,
)
from lscat.invariants import ZClass, cup_length_bruteforce, mwgt_lower, verify_witness
from lscat.steenrod import ActionTable, Op, autofill, validate

c1 = pytest.mark.criterion(1, "mod-2 invariant table")
c2 = pytest.mark.criterion(2, "mod-3 invariant table")
c3 = pytest.mark.criterion(3, "witness certificates and negative controls")
c4 = pytest.mark.criterion(4, "Cotor by the cobar complex")
c5 = pytest.mark.criterion(5, "Tor by the bar complex and collapse")
c6 = pytest.mark.criterion(6, "E-infinity reconstruction")
c7 = pytest.mark.criterion(7, "property suites")
c8 = pytest.mark.criterion(8, "degree-vanishing by enumeration")

MOD2 = {"G2": (4, 4, 4), "F4": (6, 6, 8), "E6": (8, 8, 10), "E7": (13, 13, 15), "E8": (32, 32, 32)}
MOD3_CUP = (2, 6, 8, 9, 12)
MOD3_WGT = (2, 8, 10, 11, 16)
MOD3_MWGT = (2, 8, 10, 13, 18)


# -- 1 and 2 ---------------------------------------------------------------


@c1
def test_mod2_table():
    start = time.perf_counter()
    got = {}
    for g in catalog.GROUPS:
        e = catalog.get(g, 2)
        r = e.invariants()
        assert r.cup == cup_length_bruteforce(e.algebra)
        got[g] = (r.cup, r.wgt, r.mwgt_lower)
    elapsed = time.perf_counter() - start
    assert got == MOD2
    assert elapsed < 10


@c2
def test_mod3_table():
    start = time.perf_counter()
    reports = [catalog.get(g, 3).invariants() for g in catalog.GROUPS]
    elapsed = time.perf_counter() - start
    assert tuple(r.cup for r in reports) == MOD3_CUP
    assert tuple(r.wgt for r in reports) == MOD3_WGT
    assert tuple(r.mwgt_lower for r in reports) == MOD3_MWGT
    assert elapsed < 10


# -- 3 ---------------------------------------------------------------------

WITNESSES = [
    ("F4", 2, "z11", Op(2, 4), "x15", "x3^3*x5*x23", 7),
    ("E6", 2, "z11", Op(2, 4), "x15", "x3^3*x5*x9*x17*x23", 9),
    ("E7", 2, "z11", Op(2, 4), "x15", "x3^3*x5^3*x9^3*x17*x23*x27", 14),
    ("E7", 3, "z23", Op(3, 1), "x27", "x8^2*x3*x7*x11*x15*x19*x35", 12),
    ("E8", 3, "z23", Op(3, 1), "x27", "x8^2*x20^2*x3*x7*x15*x19*x35*x39*x47", 17),
]


def _zclass(entry, name):
    return next(z for z in entry.zclasses if z.name == name)


@c3
@pytest.mark.parametrize("group,p,z,op,x,mu,m", WITNESSES, ids=[f"{w[0]}-{w[1]}" for w in WITNESSES])
def test_witness_valid(group, p, z, op, x, mu, m):
    e = catalog.get(group, p)
    A = e.algebra
    cert = verify_witness(A, e.table, _zclass(e, z), op, x, A.parse_monomial(mu), m)
    assert cert.valid is True
    assert cert.bound == m + 1
    report = e.invariants()
    assert report.certificate.m == m
    assert report.mwgt_lower == m + 1


@c3
def test_negative_perturbed_mu():
    e = catalog.get("F4", 2)
    A = e.algebra
    cert = verify_witness(A, e.table, _zclass(e, "z11"), Op(2, 4), "x15", A.parse_monomial("x3^2*x5*x23"), 7)
    assert cert.valid is False
    assert cert.checks["nonvanishing"] is False


@c3
def test_negative_removed_relation():
    e = catalog.get("F4", 2)
    A = e.algebra
    z = _zclass(e, "z11").without_relation(Op(2, 4), "x15")
    cert = verify_witness(A, e.table, z, Op(2, 4), "x15", A.parse_monomial("x3^3*x5*x23"), 7)
    assert cert.valid is False
    assert cert.checks["survival"] is False
    report = mwgt_lower(A, e.table, [z])
    assert report.certificate is None
    assert report.mwgt_lower == report.wgt == 6


@c3
def test_negative_even_degree_target():
    e = catalog.get("F4", 3)
    A = e.algebra
    b = Op(3, 0, 1)
    z = ZClass("z7", 7, 1, [(b, "x8")])
    mu = A.parse_monomial("x8*x3*x7*x11*x15")
    cert = verify_witness(A, e.table, z, b, "x8", mu, A.weight(mu) + 2)
    assert cert.checks["parity"] is False
    assert cert.valid is False


# -- 4 ---------------------------------------------------------------------


@c4
@pytest.mark.parametrize("group,p", [("G2", 2), ("G2", 3), ("F4", 3)])
def test_cotor_matches(group, p):
    e = catalog.get(group, p)
    start = time.perf_counter()
    dims = cobar_homology(e.loop_coalgebra, 16)
    assert time.perf_counter() - start < 60
    assert compare_dims(dims, e.expected_cotor, 16) == []


@c4
def test_cotor_f4_mod2_finding():
    start = time.perf_counter()
    rep = catalog.verify_entry(catalog.get("F4", 2), 17)
    assert time.perf_counter() - start < 60
    (res,) = rep.by_name("cotor-vs-stated")
    assert res.status == catalog.FINDING
    assert "degree 17" in res.detail


# -- 5 ---------------------------------------------------------------------


@c5
@pytest.mark.parametrize("group", ["G2", "E6", "E7", "E8"])
def test_tor_matches_mod2(group):
    e = catalog.get(group, 2)
    dims = bar_homology(e.algebra, 16)
    assert compare_dims(dims, e.loop_coalgebra, 16) == []


@c5
@pytest.mark.parametrize("group", catalog.GROUPS)
def test_collapse_mod2(group):
    assert collapse_check(bar_homology(catalog.get(group, 2).algebra, 16))


@c5
@pytest.mark.parametrize("group", ["F4", "E6", "E7", "E8"])
def test_odd_suspension_findings_mod3(group):
    rep = catalog.verify_entry(catalog.get(group, 3), 16)
    statuses = {r.name: r.status for r in rep.results}
    assert statuses["collapse"] == catalog.FINDING
    assert statuses["tor-vs-stated"] == catalog.FINDING
    assert not rep.failed


# -- 6 ---------------------------------------------------------------------


@c6
@pytest.mark.parametrize("group,p", [(g, p) for p in catalog.PRIMES for g in catalog.GROUPS])
def test_e_infinity(group, p):
    e = catalog.get(group, p)
    N = max(20, e.algebra.top_degree())
    assert apply_differentials(e.expected_cotor, e.differentials, N) == e.algebra.poincare_dims(N)


# -- 7 ---------------------------------------------------------------------


def _random_element(A: Algebra, rng: random.Random, degree: int):
    basis = A.basis(degree)
    return A.element({m: rng.randrange(A.prime) for m in basis})


@c7
@pytest.mark.parametrize("group,p", [(g, p) for p in catalog.PRIMES for g in catalog.GROUPS])
def test_commutativity_associativity(group, p):
    A = catalog.get(group, p).algebra
    rng = random.Random(f"{group}{p}")
    degrees = [d for d in range(1, 40) if A.basis(d)]
    for _ in range(200):
        da, db, dc = (rng.choice(degrees) for _ in range(3))
        a, b, c = (_random_element(A, rng, d) for d in (da, db, dc))
        assert a * b == (b * a).scale((-1) ** (da * db))
        assert (a * b) * c == a * (b * c)


@c7
@pytest.mark.parametrize("p", [2, 3, 5])
def test_divided_power_laws(p):
    assert divided_power_product(1, 1, p) == 2 % p
    C = Coalgebra(p, (Cofactor("g", 2, "divided"), Cofactor("t", 4, "truncated", p)))
    for n in range(1, 8):
        coprod = C.coproduct((n, 0))
        assert sorted(coprod) == [((i, 0), (n - i, 0), 1) for i in range(n + 1)]
    for n in range(1, p):
        expected = {((0, i), (0, n - i)): comb(n, i) % p for i in range(n + 1) if comb(n, i) % p}
        assert {(l, r): c for l, r, c in C.coproduct((0, n))} == expected


@c7
@pytest.mark.parametrize("group,p", [(g, p) for p in catalog.PRIMES for g in catalog.GROUPS])
def test_d_squared_zero(group, p):
    e = catalog.get(group, p)
    B = BarComplex(e.algebra)
    K = CobarComplex(e.loop_coalgebra)
    for n in range(4, 19):
        for s in range(2, 6):
            if B.words(s, n) and B.words(s - 2, n):
                assert (B.differential(s - 1, n) @ B.differential(s, n)).is_zero()
            if K.words(s - 2, n) and K.words(s, n):
                assert (K.differential(s - 1, n) @ K.differential(s - 2, n)).is_zero()


@c7
@pytest.mark.parametrize("group,p", [(g, p) for p in catalog.PRIMES for g in catalog.GROUPS])
def test_tables_validate(group, p):
    e = catalog.get(group, p)
    assert validate(e.table) == []


@c7
def test_validation_rejects_bad_tables():
    A = catalog.get("E7", 2).algebra.with_heights({"x5": 8})
    assert validate(autofill(ActionTable.build(A, {("x3", "Sq2"): "x5"})))
    F4 = catalog.get("F4", 2).algebra
    with pytest.raises(ValueError):
        autofill(ActionTable.build(F4, {("x3", "Sq3"): 0}))
    B = catalog.get("F4", 3).algebra
    bad = ActionTable.build(B, {("x3", "b"): "x3"})
    assert validate(bad)


@c7
def test_chain_on_every_report():
    for e in catalog.entries():
        for strict in (False, True):
            r = e.invariants(strict=strict)
            assert r.cup <= r.wgt <= r.mwgt_lower


@c7
def test_top_degrees():
    assert tuple(catalog.get(g, p).algebra.top_degree() for g in catalog.GROUPS for p in (2,)) == (
        14, 52, 78, 133, 248,
    )
    assert tuple(catalog.get(g, 3).algebra.top_degree() for g in catalog.GROUPS) == (14, 52, 78, 133, 248)


# -- 8 ---------------------------------------------------------------------


@c8
@pytest.mark.parametrize("group,p,d", [("F4", 2, 48), ("E6", 2, 74), ("E7", 2, 129), ("E7", 3, 129), ("E8", 3, 244)])
def test_degree_vanishing(group, p, d):
    assert catalog.get(group, p).algebra.basis(d) == []
