from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lscat.algebra import Algebra, Generator, exterior, truncated
from lscat.coalgebra import (
    BarComplex,
    BigradedDims,
    CobarComplex,
    Coalgebra,
    Cofactor,
    DifferentialSpec,
    apply_differentials,
    bar_homology,
    cobar_homology,
    collapse_check,
    compare_dims,
    cotor_presentation,
    differential_issues,
    divided_power_product,
    infinity_page,
    tor_presentation,
)


def degrees(d: BigradedDims) -> list:
    return [t for t, v in d.totals().items() for _ in range(v)]


def test_small_bar_examples():
    assert degrees(bar_homology(Algebra(2, (exterior("x5", 5),)), 16)) == [0, 4, 8, 12, 16]
    # F2[x3]/(x3^4): exterior on sigma x3 (degree 2) and divided powers on degree 10
    assert degrees(bar_homology(Algebra(2, (truncated("x3", 3, 4),)), 12)) == [0, 2, 10, 12]


def test_small_cobar_examples():
    assert degrees(cobar_homology(Coalgebra(2, (Cofactor("a2", 2, "exterior"),)), 12)) == [0, 3, 6, 9, 12]
    assert degrees(cobar_homology(Coalgebra(2, (Cofactor("a4", 4, "divided"),)), 9)) == [0, 5]


def test_divided_power_product():
    assert divided_power_product(1, 1, 2) == 0
    assert divided_power_product(1, 1, 3) == 2
    assert divided_power_product(1, 2, 3) == 0
    assert divided_power_product(2, 2, 5) == 1


def test_cofactor_validation():
    with pytest.raises(ValueError):
        Cofactor("a", 2, "weird")
    with pytest.raises(ValueError):
        Cofactor("a", 2, "truncated")
    with pytest.raises(ValueError):
        BarComplex(Algebra(2, (exterior("x1", 1),)))


def test_bigraded_json_round_trip():
    d = BigradedDims({(1, 2): 1, (0, 0): 1, (2, 4): 0}, 6)
    assert BigradedDims.from_json(d.to_json(), 6) == d
    assert d.totals()[5] == 0
    assert not collapse_check(BigradedDims({(1, 3): 1}))


def test_differentials_and_infinity_page():
    E2 = Algebra(2, (Generator("x3", 3), exterior("x5", 5), exterior("z11", 11)))
    d = DifferentialSpec.of(3, "z11", "x3^4")
    assert differential_issues(E2, d) == []
    assert apply_differentials(E2, [d], 14) == Algebra(2, (truncated("x3", 3, 4), exterior("x5", 5))).poincare_dims(14)
    bad = DifferentialSpec.of(5, "z11", "x3^4")
    assert any("word length" in i for i in differential_issues(E2, bad))
    assert any("degree" in i for i in differential_issues(E2, DifferentialSpec.of(3, "z11", "x5^2")))
    with pytest.raises(ValueError):
        infinity_page(E2, [d, d])
    with pytest.raises(ValueError):
        infinity_page(E2, [DifferentialSpec.of(3, "x3", "x5")])


def test_cotor_form_needs_small_height():
    with pytest.raises(ValueError):
        cotor_presentation(Coalgebra(2, (Cofactor("a2", 2, "truncated", 3),)))


def test_compare_dims_reports_degrees():
    A = Algebra(2, (exterior("x2", 2),))
    B = Algebra(2, (exterior("x4", 4),))
    disc = compare_dims(A, B, 5)
    assert [d.degree for d in disc] == [2, 4]


@st.composite
def algebras(draw):
    p = draw(st.sampled_from([2, 3]))
    gens = []
    for i in range(draw(st.integers(1, 3))):
        d = draw(st.integers(2, 6))
        h = 2 if (p != 2 and d % 2) else draw(st.integers(2, 4))
        gens.append(Generator(f"x{i}", d, h))
    return Algebra(p, tuple(gens))


@st.composite
def coalgebras(draw):
    p = draw(st.sampled_from([2, 3]))
    cof = []
    for i in range(draw(st.integers(1, 3))):
        d = draw(st.integers(2, 6))
        kind = draw(st.sampled_from(["exterior", "divided", "truncated"]))
        if p != 2 and d % 2:
            kind = "exterior"
        h = draw(st.integers(2, p)) if kind == "truncated" else None
        cof.append(Cofactor(f"a{i}", d, kind, h))
    return Coalgebra(p, tuple(cof))


@settings(max_examples=40, deadline=None)
@given(algebras())
def test_bar_matches_kunneth(A):
    assert compare_dims(bar_homology(A, 10), tor_presentation(A), 10) == []


@settings(max_examples=40, deadline=None)
@given(coalgebras())
def test_cobar_matches_kunneth(C):
    assert compare_dims(cobar_homology(C, 10), cotor_presentation(C), 10) == []


@settings(max_examples=30, deadline=None)
@given(algebras(), coalgebras())
def test_d_squared_zero(A, C):
    B = BarComplex(A)
    K = CobarComplex(C)
    for n in range(2, 11):
        for s in range(2, 5):
            if B.words(s, n) and B.words(s - 2, n):
                assert (B.differential(s - 1, n) @ B.differential(s, n)).is_zero()
            if K.words(s - 2, n) and K.words(s, n):
                assert (K.differential(s - 1, n) @ K.differential(s - 2, n)).is_zero()


@settings(max_examples=40, deadline=None)
@given(coalgebras(), st.data())
def test_coproduct_counit_and_degree(C, data):
    basis = [b for d in range(1, 13) for b in C.basis(d)]
    if not basis:
        return
    b = data.draw(st.sampled_from(basis))
    for left, right, _ in C.coproduct(b):
        assert C.degree(left) + C.degree(right) == C.degree(b)
    terms = {(l, r): c for l, r, c in C.coproduct(b)}
    assert terms[(C.unit, b)] == 1 and terms[(b, C.unit)] == 1
