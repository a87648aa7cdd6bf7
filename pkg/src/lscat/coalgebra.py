"""Coalgebras, bar and cobar complexes, and transpotence differentials.

``bar_homology`` computes Tor over a monomial algebra from its reduced bar
complex and ``cobar_homology`` computes Cotor over a tensor product of
exterior, truncated polynomial and divided power coalgebras.  Both are
built degree slice by degree slice and ranked with :mod:`lscat.fp_linalg`.

Degree conventions: a bar word ``[a_1|...|a_s]`` sits in total degree
``sum(|a_i|) - s``; a cobar word ``[b_1|...|b_s]`` in ``sum(|b_i|) + s``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import INF, Algebra, Generator
from .fp_linalg import FpMatrix, is_prime, rank

log = logging.getLogger(__name__)

KINDS = ("exterior", "truncated", "divided")


@dataclass(frozen=True)
class Cofactor:
    name: str
    degree: int
    kind: str = "divided"
    height: int | None = None  # truncated polynomial only

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"{self.name}: unknown cofactor kind {self.kind!r}")
        if self.degree <= 0:
            raise ValueError(f"{self.name}: degree must be positive")
        if self.kind == "truncated" and (self.height is None or self.height < 2):
            raise ValueError(f"{self.name}: truncated cofactor needs a height >= 2")

    def max_index(self, budget: int) -> int:
        n = budget // self.degree
        if self.kind == "exterior":
            return min(n, 1)
        if self.kind == "truncated":
            return min(n, self.height - 1)
        return n

    def coproduct_coefficient(self, n: int, i: int, p: int) -> int:
        """Coefficient of ``e_i (x) e_{n-i}`` in the coproduct of the n-th basis element."""
        if self.kind == "truncated":
            return math.comb(n, i) % p
        return 1


@dataclass(frozen=True)
class Coalgebra:
    """Tensor product of cofactors; basis elements are index tuples."""

    prime: int
    cofactors: tuple

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        object.__setattr__(self, "cofactors", tuple(self.cofactors))
        names = [c.name for c in self.cofactors]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate cofactor names in {names}")

    @property
    def unit(self) -> tuple:
        return (0,) * len(self.cofactors)

    def degree(self, b: Sequence[int]) -> int:
        return sum(e * c.degree for e, c in zip(b, self.cofactors))

    def basis(self, d: int) -> list:
        return list(_cobasis(self, d))

    def dims(self, n: int) -> dict[int, int]:
        return {d: len(_cobasis(self, d)) for d in range(n + 1)}

    def format(self, b: Sequence[int]) -> str:
        parts = []
        for e, c in zip(b, self.cofactors):
            if e == 0:
                continue
            if c.kind == "divided":
                parts.append(f"g{e}({c.name})")
            elif e == 1:
                parts.append(c.name)
            else:
                parts.append(f"{c.name}^{e}")
        return "*".join(parts) or "1"

    def reduced_coproduct(self, b: Sequence[int]) -> list[tuple[tuple, tuple, int]]:
        """``Delta(b) - b(x)1 - 1(x)b`` as ``(left, right, coefficient)`` triples."""
        b = tuple(b)
        p = self.prime
        out = []
        for left, coef in _splits(self, b):
            right = tuple(x - y for x, y in zip(b, left))
            if left == self.unit or right == self.unit:
                continue
            coef %= p
            if coef:
                out.append((left, right, coef))
        return out

    def coproduct(self, b: Sequence[int]) -> list[tuple[tuple, tuple, int]]:
        b = tuple(b)
        out = []
        for left, coef in _splits(self, b):
            coef %= self.prime
            if coef:
                out.append((left, tuple(x - y for x, y in zip(b, left)), coef))
        return out


def _splits(C: Coalgebra, b: tuple):
    """Yield ``(left, signed coefficient)`` over all cofactor-wise splittings of b."""
    p = C.prime
    results = [((), 1, 0, 0)]  # (left prefix, coef, |left prefix|, |right prefix|)
    for e, c in zip(b, C.cofactors):
        nxt = []
        for prefix, coef, ldeg, rdeg in results:
            for i in range(e + 1):
                k = c.coproduct_coefficient(e, i, p)
                if k == 0:
                    continue
                li, ri = i * c.degree, (e - i) * c.degree
                sign = -1 if (p != 2 and (rdeg * li) % 2) else 1
                nxt.append((prefix + (i,), coef * k * sign, ldeg + li, rdeg + ri))
        results = nxt
    for prefix, coef, _, _ in results:
        yield prefix, coef


@lru_cache(maxsize=4096)
def _cobasis(C: Coalgebra, d: int) -> tuple:
    out = []

    def rec(i, budget, acc):
        if i == len(C.cofactors):
            if budget == 0:
                out.append(tuple(acc))
            return
        c = C.cofactors[i]
        for e in range(c.max_index(budget) + 1):
            acc.append(e)
            rec(i + 1, budget - e * c.degree, acc)
            acc.pop()

    if d >= 0:
        rec(0, d, [])
    return tuple(sorted(out, reverse=True))


def reduced_coproduct(C: Coalgebra, b: Sequence[int]):
    return C.reduced_coproduct(b)


def divided_power_product(i: int, j: int, p: int) -> int:
    """Coefficient c with ``gamma_i * gamma_j = c * gamma_{i+j}`` over F_p."""
    return math.comb(i + j, i) % p


# -- bigraded bookkeeping -------------------------------------------------


@dataclass
class BigradedDims:
    """Dimensions indexed by (word length s, total degree t); zeros omitted."""

    dims: dict = field(default_factory=dict)
    cutoff: int | None = None

    def __post_init__(self):
        self.dims = {k: v for k, v in self.dims.items() if v}
        if any(v < 0 for v in self.dims.values()):
            raise ValueError("negative dimension")

    def __getitem__(self, key) -> int:
        return self.dims.get(key, 0)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (s, t), v in self.dims.items():
            out[t] = out.get(t, 0) + v
        if self.cutoff is not None:
            for t in range(self.cutoff + 1):
                out.setdefault(t, 0)
        return dict(sorted(out.items()))

    def to_json(self) -> list:
        return [[s, t, v] for (s, t), v in sorted(self.dims.items(), key=lambda kv: (kv[0][1], kv[0][0]))]

    @classmethod
    def from_json(cls, rows: Iterable, cutoff: int | None = None) -> "BigradedDims":
        return cls({(s, t): v for s, t, v in rows}, cutoff)


# -- bar complex ----------------------------------------------------------


class BarComplex:
    """Reduced bar complex of an augmented monomial algebra, sliced by internal degree."""

    def __init__(self, A: Algebra):
        if not A.finite:
            raise ValueError("bar complex needs a finite algebra")
        if min(g.degree for g in A.generators) < 2:
            raise ValueError("bar complex needs generators of degree >= 2")
        self.A = A
        self._words: dict = {}
        self._ranks: dict = {}

    def words(self, s: int, n: int) -> list:
        key = (s, n)
        if key in self._words:
            return self._words[key]
        A = self.A
        if s == 0:
            out = [()] if n == 0 else []
        else:
            out = []
            top = A.top_degree()
            for d in range(1, min(n, top) + 1):
                letters = A.basis(d)
                if not letters:
                    continue
                rest = self.words(s - 1, n - d)
                for a in letters:
                    out.extend((a,) + w for w in rest)
        self._words[key] = out
        return out

    def differential(self, s: int, n: int) -> FpMatrix:
        """``d: B_s -> B_{s-1}`` in internal degree n."""
        A = self.A
        src = self.words(s, n)
        tgt = self.words(s - 1, n) if s >= 1 else []
        cols = {}
        for w in src:
            vec: dict = {}
            acc = 0
            for i in range(s - 1):
                acc += A.degree(w[i]) - 1
                sign, prod = A.multiply_monomials(w[i], w[i + 1])
                if prod is None:
                    continue
                if acc % 2:
                    sign = -sign
                image = w[:i] + (prod,) + w[i + 2:]
                vec[image] = vec.get(image, 0) + sign
            cols[w] = vec
        return FpMatrix.from_columns(A.prime, tgt, src, cols)

    def rank(self, s: int, n: int) -> int:
        key = (s, n)
        if key not in self._ranks:
            self._ranks[key] = 0 if s <= 0 else rank(self.differential(s, n))
        return self._ranks[key]


def bar_homology(A: Algebra, N: int) -> BigradedDims:
    """Tor over A, as dimensions per (s, total degree) for total degree <= N."""
    B = BarComplex(A)
    dmin = min(g.degree for g in A.generators)
    dims = {}
    s = 0
    while s * (dmin - 1) <= N:
        for n in range(s * dmin, N + s + 1):
            c = len(B.words(s, n))
            if not c:
                continue
            h = c - B.rank(s, n) - B.rank(s + 1, n)
            if h:
                dims[(s, n - s)] = h
        s += 1
    log.debug("bar homology of %d generators through %d: %d bidegrees", len(A.generators), N, len(dims))
    return BigradedDims(dims, N)


# -- cobar complex --------------------------------------------------------


class CobarComplex:
    """Reduced cobar complex of a coalgebra, sliced by internal degree."""

    def __init__(self, C: Coalgebra):
        self.C = C
        self._words: dict = {}
        self._ranks: dict = {}

    def words(self, s: int, n: int) -> list:
        key = (s, n)
        if key in self._words:
            return self._words[key]
        C = self.C
        if s == 0:
            out = [()] if n == 0 else []
        else:
            out = []
            for d in range(1, n + 1):
                letters = C.basis(d)
                if not letters:
                    continue
                rest = self.words(s - 1, n - d)
                for b in letters:
                    out.extend((b,) + w for w in rest)
        self._words[key] = out
        return out

    def differential(self, s: int, n: int) -> FpMatrix:
        """``d: C^s -> C^{s+1}`` in internal degree n."""
        C = self.C
        p = C.prime
        src = self.words(s, n)
        tgt = self.words(s + 1, n)
        cols = {}
        for w in src:
            vec: dict = {}
            before = 0
            for i, b in enumerate(w):
                for left, right, coef in C.reduced_coproduct(b):
                    sign = -1 if (p != 2 and (before + C.degree(left)) % 2) else 1
                    image = w[:i] + (left, right) + w[i + 1:]
                    vec[image] = vec.get(image, 0) + sign * coef
                before += C.degree(b) + 1
            cols[w] = vec
        return FpMatrix.from_columns(p, tgt, src, cols)

    def rank(self, s: int, n: int) -> int:
        key = (s, n)
        if key not in self._ranks:
            self._ranks[key] = 0 if s < 0 else rank(self.differential(s, n))
        return self._ranks[key]


def cobar_homology(C: Coalgebra, N: int) -> BigradedDims:
    """Cotor over C, as dimensions per (s, total degree) for total degree <= N."""
    K = CobarComplex(C)
    dmin = min((c.degree for c in C.cofactors), default=1)
    dims = {}
    s = 0
    while s * (dmin + 1) <= N:
        for n in range(s * dmin, N - s + 1):
            c = len(K.words(s, n))
            if not c:
                continue
            h = c - K.rank(s, n) - (K.rank(s - 1, n) if s >= 1 else 0)
            if h:
                dims[(s, n + s)] = h
        s += 1
    log.debug("cobar homology of %d cofactors through %d: %d bidegrees", len(C.cofactors), N, len(dims))
    return BigradedDims(dims, N)


def collapse_check(d: BigradedDims) -> bool:
    """True iff every nonzero entry sits in even total degree."""
    return all(t % 2 == 0 for (_, t) in d.dims)


# -- formal Kunneth descriptions ------------------------------------------


def tor_presentation(A: Algebra, names: Mapping[str, str] | None = None) -> Coalgebra:
    """Graded shape of Tor over A read off factor by factor.

    An exterior generator x_d gives a divided power cofactor in degree d-1;
    a truncated one x_d with height h gives an exterior class in degree d-1
    and a divided power transpotence class in degree h*d - 2.
    """
    names = names or {}
    out = []
    for g in A.generators:
        label = names.get(g.name, f"a{g.degree - 1}<{g.name}>")
        # at odd p a square-zero class of even degree is a height-2 truncation
        if g.height == 2 and (A.prime == 2 or g.degree % 2):
            out.append(Cofactor(label, g.degree - 1, "divided"))
        elif g.height == INF:
            out.append(Cofactor(label, g.degree - 1, "exterior"))
        else:
            h = int(g.height)
            out.append(Cofactor(f"a{g.degree - 1}<{g.name}>", g.degree - 1, "exterior"))
            out.append(Cofactor(f"b{h * g.degree - 2}<{g.name}>", h * g.degree - 2, "divided"))
    return Coalgebra(A.prime, tuple(out))


def cotor_presentation(C: Coalgebra) -> Algebra:
    """Graded shape of Cotor over C, with generator weight = cobar word length.

    A truncated cofactor of height h is read as primitively generated, so
    its dual is a truncated polynomial algebra only for h <= p; larger
    heights are rejected.
    """
    gens = []
    for c in C.cofactors:
        if c.kind == "exterior" and C.prime != 2 and c.degree % 2 == 0:
            c = Cofactor(c.name, c.degree, "truncated", 2)
        if c.kind == "exterior":
            gens.append(Generator(f"x{c.degree + 1}<{c.name}>", c.degree + 1, INF, 1))
        elif c.kind == "divided":
            gens.append(Generator(f"x{c.degree + 1}<{c.name}>", c.degree + 1, 2, 1))
        else:
            if c.height > C.prime:
                raise ValueError(f"{c.name}: no closed form for height {c.height} > p = {C.prime}")
            gens.append(Generator(f"x{c.degree + 1}<{c.name}>", c.degree + 1, 2, 1))
            deg = c.height * c.degree + 2
            gens.append(Generator(f"y{deg}<{c.name}>", deg, INF, 2))
    return Algebra(C.prime, tuple(gens)) if C.prime == 2 else _odd_safe(C.prime, gens)


def _odd_safe(p: int, gens: list) -> Algebra:
    # at odd p an odd-degree polynomial generator would be exterior anyway
    fixed = [Generator(g.name, g.degree, 2 if g.degree % 2 else g.height, g.weight) for g in gens]
    return Algebra(p, tuple(fixed))


# -- differentials --------------------------------------------------------


@dataclass(frozen=True)
class DifferentialSpec:
    page: int
    source: str
    target: tuple  # ((generator name, exponent),)

    @classmethod
    def of(cls, page: int, source: str, target: Mapping[str, int] | str) -> "DifferentialSpec":
        if isinstance(target, str):
            name, _, e = target.partition("^")
            target = {name.strip(): int(e) if e else 1}
        return cls(page, source, tuple(sorted(target.items())))

    @property
    def target_map(self) -> dict:
        return dict(self.target)

    def __str__(self):
        tgt = "*".join(f"{g}^{e}" if e != 1 else g for g, e in self.target)
        return f"d{self.page}({self.source}) = {tgt}"


def differential_issues(E2: Algebra, spec: DifferentialSpec) -> list[str]:
    """Degree and word-length consistency of one differential.

    Generator weights of ``E2`` are read as cobar word lengths.
    """
    issues = []
    try:
        src = E2.generator(spec.source)
    except KeyError:
        return [f"{spec}: source {spec.source} is not an E2 generator"]
    tdeg = tlen = 0
    for g, e in spec.target:
        try:
            gen = E2.generator(g)
        except KeyError:
            return [f"{spec}: target generator {g} is not an E2 generator"]
        tdeg += e * gen.degree
        tlen += e * gen.weight
    if tdeg != src.degree + 1:
        issues.append(f"{spec}: target degree {tdeg} != source degree {src.degree} + 1")
    if tlen != src.weight + spec.page:
        issues.append(f"{spec}: target word length {tlen} != source word length {src.weight} + {spec.page}")
    return issues


def apply_differentials(E2: Algebra, ds: Sequence[DifferentialSpec], N: int) -> dict[int, int]:
    """Graded dimensions of the formal E-infinity page through degree N.

    Each differential ``d(z) = x^k`` removes the exterior source z and
    imposes ``x^k = 0``.
    """
    return infinity_page(E2, ds).poincare_dims(N)


def infinity_page(E2: Algebra, ds: Sequence[DifferentialSpec]) -> Algebra:
    heights: dict[str, int] = {}
    sources = []
    for d in ds:
        src = E2.generator(d.source)
        if src.height != 2:
            raise ValueError(f"{d}: source must be an exterior generator")
        if d.source in sources:
            raise ValueError(f"{d}: {d.source} already supports a differential")
        if len(d.target) != 1:
            raise ValueError(f"{d}: target must be a power of a single generator")
        (g, k), = d.target
        gen = E2.generator(g)
        if g in heights and heights[g] != k:
            raise ValueError(f"{d}: {g}^{heights[g]} was already killed by an earlier differential")
        if gen.height != INF and k >= gen.height:
            raise ValueError(f"{d}: {g}^{k} is already zero on E2")
        heights[g] = k
        sources.append(d.source)
    return E2.with_heights(heights).without(sources)


# -- comparison -----------------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    degree: int
    computed: int
    expected: int

    def __str__(self):
        return f"degree {self.degree}: computed {self.computed}, expected {self.expected}"


def _as_totals(x, N: int) -> dict[int, int]:
    if isinstance(x, BigradedDims):
        t = x.totals()
    elif isinstance(x, Algebra):
        t = x.poincare_dims(N)
    elif isinstance(x, Coalgebra):
        t = x.dims(N)
    else:
        t = dict(x)
    return {d: t.get(d, 0) for d in range(N + 1)}


def compare_dims(computed, expected, N: int) -> list[Discrepancy]:
    """Per-degree differences through N; an empty list means agreement."""
    a, b = _as_totals(computed, N), _as_totals(expected, N)
    return [Discrepancy(d, a[d], b[d]) for d in range(N + 1) if a[d] != b[d]]
