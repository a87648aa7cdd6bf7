from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lscat.fp_linalg import FpMatrix, FpScalar, image_membership, inverse, is_prime, kernel_basis, rank


def span(M: FpMatrix) -> set:
    """Column span by enumerating every coefficient vector (oracle)."""
    cols = M.columns()
    out = set()
    for coeffs in itertools.product(range(M.p), repeat=len(M.cols)):
        vec = {}
        for c, a in zip(M.cols, coeffs):
            for r, v in cols[c].items():
                vec[r] = (vec.get(r, 0) + a * v) % M.p
        out.add(tuple(vec.get(r, 0) for r in M.rows))
    return out


@st.composite
def matrices(draw, max_dim=4):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(0, max_dim))
    m = draw(st.integers(0, max_dim))
    data = [[draw(st.integers(0, p - 1)) for _ in range(m)] for _ in range(n)]
    if n == 0:
        return FpMatrix(p, (), tuple(range(m)), {})
    return FpMatrix.from_rows(p, data)


def test_primes_and_inverses():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    for p in (2, 3, 5, 7):
        for a in range(1, p):
            assert a * inverse(a, p) % p == 1
    with pytest.raises(ZeroDivisionError):
        inverse(0, 5)


def test_scalar_arithmetic():
    a = FpScalar(2, 3)
    assert int(a + 2) == 1
    assert int(a * a) == 1
    assert int(a / 2) == 1
    assert not FpScalar(3, 3)


def test_rank_examples():
    M = FpMatrix.from_rows(2, [[1, 1], [1, 1]])
    assert rank(M) == 1
    assert rank(FpMatrix.from_rows(3, [[1, 2], [2, 1]])) == 1
    assert rank(FpMatrix.from_rows(5, [[1, 2], [2, 1]])) == 2
    assert rank(FpMatrix(3, (), (), {})) == 0


def test_image_membership_errors():
    M = FpMatrix.from_rows(3, [[1, 0], [0, 0]])
    assert image_membership(M, [2, 0])[0]
    assert not image_membership(M, [0, 1])[0]
    with pytest.raises(ValueError):
        image_membership(M, [1, 0, 0])
    with pytest.raises(ValueError):
        image_membership(M, {"nope": 1})


def test_labels_must_be_unique():
    with pytest.raises(ValueError):
        FpMatrix(2, ("a", "a"), ("b",), {})
    with pytest.raises(KeyError):
        FpMatrix(2, ("a",), ("b",), {("c", "b"): 1})


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_span_size(M):
    assert M.p ** rank(M) == len(span(M))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    ker = kernel_basis(M)
    assert rank(M) + len(ker) == len(M.cols)
    for v in ker:
        assert M.apply(v) == {}


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_membership_agrees_with_span(M, data):
    vec = [data.draw(st.integers(0, M.p - 1)) for _ in M.rows]
    ok, pre = image_membership(M, vec)
    assert ok == (tuple(vec) in span(M))
    if ok:
        image = M.apply(pre)
        assert all(image.get(r, 0) == v % M.p for r, v in zip(M.rows, vec))


@settings(max_examples=80, deadline=None)
@given(matrices(3), st.data())
def test_matmul_associates_with_apply(M, data):
    other = FpMatrix.from_rows(M.p, [[data.draw(st.integers(0, M.p - 1)) for _ in range(2)] for _ in M.cols]) \
        if M.cols else None
    if other is None:
        return
    prod = M @ other
    for c in other.cols:
        assert prod.apply({c: 1}) == M.apply(other.apply({c: 1}))
