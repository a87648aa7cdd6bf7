from __future__ import annotations

import pytest

from lscat import catalog
from lscat.coalgebra import DifferentialSpec


def test_unknown_pair():
    with pytest.raises(KeyError):
        catalog.get("E9", 2)
    with pytest.raises(KeyError):
        catalog.get("G2", 5)


def test_g2_mod2_algebra():
    A = catalog.get("G2", 2).algebra
    assert [(g.name, g.degree, g.height) for g in A.generators] == [("x3", 3, 4), ("x5", 5, 2)]


def test_e8_mod3_algebra():
    A = catalog.get("E8", 3).algebra
    poly = sorted(g.degree for g in A.generators if g.height == 3)
    ext = sorted(g.degree for g in A.generators if g.height == 2)
    assert poly == [8, 20]
    assert ext == [3, 7, 15, 19, 27, 35, 39, 47]
    assert {g.name: g.weight for g in A.generators if g.weight != 1} == {"x8": 2, "x20": 2}


def test_e7_mod2_differentials():
    d = set(catalog.get("E7", 2).differentials)
    assert d == {DifferentialSpec.of(3, "z11", "x3^4"), DifferentialSpec.of(3, "z19", "x5^4"),
                 DifferentialSpec.of(3, "z35", "x9^4")}


def test_entry_invariants():
    for e in catalog.entries():
        names = set(e.expected_cotor.names)
        for d in e.differentials:
            assert d.source in {z.name for z in e.zclasses}
            for g, k in d.target:
                assert e.algebra.generator(g).height == k
        for z in e.zclasses:
            assert z.name in names
            for _, target in z.relations:
                assert target in names and target in e.algebra.names


def test_verify_g2_at_16_all_pass():
    rep = catalog.verify_entry(catalog.get("G2", 2), 16)
    assert {r.status for r in rep.results} == {catalog.PASS}


def test_verify_f4_mod2_at_17():
    rep = catalog.verify_entry(catalog.get("F4", 2), 17)
    status = {r.name: r.status for r in rep.results}
    for name in ("top-degree", "steenrod-table", "generator-names", "e-infinity", "invariants",
                 "tor-vs-kunneth", "cotor-vs-kunneth", "collapse"):
        assert status[name] == catalog.PASS, name
    assert status["tor-vs-stated"] == catalog.FINDING
    assert status["cotor-vs-stated"] == catalog.FINDING
    assert "degree 16" in rep.by_name("tor-vs-stated")[0].detail
    assert not rep.failed


def test_verify_e8_mod3_invariants():
    rep = catalog.verify_entry(catalog.get("E8", 3), 20)
    (inv,) = rep.by_name("invariants")
    assert inv.status == catalog.PASS
    assert "cup=12 wgt=16 mwgtLower=18" in inv.detail


def test_verify_needs_cutoff():
    with pytest.raises(ValueError):
        catalog.verify_entry(catalog.get("G2", 2), 11)


def test_unlisted_discrepancy_is_a_fail():
    import dataclasses

    e = catalog.get("G2", 2)
    broken = dataclasses.replace(e, loop_coalgebra=catalog.get("F4", 2).loop_coalgebra)
    rep = catalog.verify_entry(broken, 16)
    assert rep.by_name("tor-vs-stated")[0].status == catalog.FAIL
    assert rep.failed


def test_expected_tables():
    t = catalog.expected_tables()
    assert t["mod2"]["E7"] == {"wgt": 13, "mwgt_lower": 15}
    assert t["differences"]["E8"]["wgt_minus_cup_3"] == 4
    assert t["differences"]["F4"]["mwgt_minus_wgt_3"] == 0
    rows = [t["differences"][g] for g in catalog.GROUPS]
    assert [r["mwgt_minus_wgt_2"] for r in rows] == [0, 2, 2, 2, 0]
    assert [r["mwgt_minus_wgt_3"] for r in rows] == [0, 0, 0, 2, 2]


def test_derived_and_stated_coalgebras_side_by_side():
    e = catalog.get("F4", 2)
    assert "a16" in [c.name for c in e.loop_coalgebra.cofactors]
    assert 16 not in [c.degree for c in e.derived_loop_coalgebra().cofactors]


def test_cover_cohomology_is_documentation():
    for e in catalog.entries():
        assert isinstance(e.cover_cohomology, str) and e.cover_cohomology
        assert e.notes
