"""Finite graded-commutative monomial algebras over F_p.

An :class:`Algebra` is a tensor product of truncated polynomial and
exterior factors, ``F_p[x_1, ..., x_k] / (x_1^{h_1}, ..., x_k^{h_k})``,
with the Koszul sign rule at odd primes.  Monomials are exponent tuples in
generator order; an :class:`Element` is a sparse map from monomials to
nonzero residues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .fp_linalg import is_prime

INF = math.inf

Monomial = tuple  # exponent vector in generator order


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    height: float = INF  # least vanishing power; 2 means exterior
    weight: int = 1

    def __post_init__(self):
        if self.degree <= 0:
            raise ValueError(f"{self.name}: degree must be positive")
        if self.height != INF and (int(self.height) != self.height or self.height < 2):
            raise ValueError(f"{self.name}: height must be an integer >= 2 or infinite")
        if self.weight < 1:
            raise ValueError(f"{self.name}: weight must be positive")

    @property
    def exterior(self) -> bool:
        return self.height == 2


def exterior(name: str, degree: int, weight: int = 1) -> Generator:
    return Generator(name, degree, 2, weight)


def truncated(name: str, degree: int, height: int, weight: int = 1) -> Generator:
    return Generator(name, degree, height, weight)


def polynomial(name: str, degree: int, weight: int = 1) -> Generator:
    return Generator(name, degree, INF, weight)


@dataclass(frozen=True)
class Algebra:
    """Presentation of a monomial algebra over ``F_prime``."""

    prime: int
    generators: tuple

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if self.prime != 2:
            for g in gens:
                if g.degree % 2 and g.height != 2:
                    raise ValueError(
                        f"{g.name}: odd-degree generators must be exterior at p={self.prime}"
                    )

    # -- lookup ---------------------------------------------------------

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    @property
    def finite(self) -> bool:
        return all(g.height != INF for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def generator(self, name: str) -> Generator:
        return self.generators[self.index(name)]

    # -- monomials ------------------------------------------------------

    @property
    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def monomial(self, exps: Mapping[str, int] | None = None, **kw) -> Monomial:
        exps = dict(exps or {}, **kw)
        out = [0] * len(self.generators)
        for name, e in exps.items():
            out[self.index(name)] = int(e)
        return tuple(out)

    def is_nonzero(self, mono: Monomial) -> bool:
        return all(0 <= e < g.height for e, g in zip(mono, self.generators))

    def degree(self, mono: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.generators))

    def weight(self, mono: Monomial) -> int:
        return sum(e * g.weight for e, g in zip(mono, self.generators))

    def word_length(self, mono: Monomial) -> int:
        return sum(mono)

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for e, g in zip(mono, self.generators):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) or "1"

    def parse_monomial(self, text: str) -> Monomial:
        """Inverse of :meth:`format_monomial` (``"x3^3*x5"``; ``"1"`` is the unit)."""
        text = text.strip()
        exps: dict[str, int] = {}
        if text and text != "1":
            for part in text.split("*"):
                name, _, e = part.strip().partition("^")
                exps[name] = exps.get(name, 0) + (int(e) if e else 1)
        return self.monomial(exps)

    def multiply_monomials(self, a: Monomial, b: Monomial) -> tuple[int, Monomial | None]:
        """Product ``a*b`` as ``(sign, canonical monomial)``; monomial is None if it vanishes."""
        prod = tuple(x + y for x, y in zip(a, b))
        if not self.is_nonzero(prod):
            return 0, None
        sign = 1
        if self.prime != 2:
            # moving each odd factor of b left past the odd factors of a that sit later
            odd = [g.degree % 2 for g in self.generators]
            later_odd_in_a = 0
            swaps = 0
            for i in reversed(range(len(prod))):
                if odd[i]:
                    swaps += b[i] * later_odd_in_a
                    later_odd_in_a += a[i]
            if swaps % 2:
                sign = -1
        return sign, prod

    # -- graded pieces --------------------------------------------------

    def basis(self, d: int) -> list:
        """All nonzero monomials of internal degree ``d`` (lexicographic order)."""
        if d < 0:
            return []
        return list(_basis(self, d))

    def monomials_up_to(self, n: int) -> Iterator[Monomial]:
        """Every nonzero monomial of degree <= n."""
        gens = self.generators

        def rec(i: int, budget: int, acc: list):
            if i == len(gens):
                yield tuple(acc)
                return
            g = gens[i]
            top = budget // g.degree
            if g.height != INF:
                top = min(top, int(g.height) - 1)
            for e in range(top + 1):
                acc.append(e)
                yield from rec(i + 1, budget - e * g.degree, acc)
                acc.pop()

        yield from rec(0, n, [])

    def top_degree(self) -> int:
        if not self.finite:
            raise ValueError("top degree is undefined for an algebra with polynomial generators")
        return sum((int(g.height) - 1) * g.degree for g in self.generators)

    def top_monomial(self) -> Monomial:
        if not self.finite:
            raise ValueError("no top monomial for an infinite algebra")
        return tuple(int(g.height) - 1 for g in self.generators)

    def poincare_dims(self, n: int) -> dict[int, int]:
        """``{d: dim A^d}`` for ``0 <= d <= n`` by monomial enumeration."""
        dims = {d: 0 for d in range(n + 1)}
        for mono in self.monomials_up_to(n):
            dims[self.degree(mono)] += 1
        return dims

    # -- elements -------------------------------------------------------

    def element(self, terms: Mapping | None = None) -> "Element":
        return Element(self, terms or {})

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial: 1})

    def zero(self) -> "Element":
        return Element(self, {})

    def gen(self, name: str) -> "Element":
        return Element(self, {self.monomial({name: 1}): 1})

    def mono(self, mono: Monomial | str | Mapping, coeff: int = 1) -> "Element":
        if isinstance(mono, str):
            mono = self.parse_monomial(mono)
        elif isinstance(mono, Mapping):
            mono = self.monomial(mono)
        if not self.is_nonzero(mono):
            return self.zero()
        return Element(self, {tuple(mono): coeff})

    def with_heights(self, heights: Mapping[str, float]) -> "Algebra":
        gens = [
            Generator(g.name, g.degree, heights.get(g.name, g.height), g.weight)
            for g in self.generators
        ]
        return Algebra(self.prime, tuple(gens))

    def without(self, names: Sequence[str]) -> "Algebra":
        drop = set(names)
        return Algebra(self.prime, tuple(g for g in self.generators if g.name not in drop))


@lru_cache(maxsize=4096)
def _basis(A: Algebra, d: int) -> tuple:
    out = [m for m in A.monomials_up_to(d) if A.degree(m) == d]
    return tuple(sorted(out, reverse=True))


class Element:
    """Immutable sparse linear combination of monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: Mapping):
        p = algebra.prime
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != len(algebra.generators):
                raise ValueError(f"monomial {m} has wrong length")
            c = int(c) % p
            if c and algebra.is_nonzero(m):
                clean[m] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, key, value):
        raise AttributeError("Element is immutable")

    def _check(self, other: "Element"):
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra != self.algebra:
            raise ValueError("elements belong to different algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Element(self.algebra, terms)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "Element":
        return Element(self.algebra, {m: c * k for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def degrees(self) -> set:
        return {self.algebra.degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else None

    def __repr__(self):
        if not self.terms:
            return "0"
        A = self.algebra
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            s = A.format_monomial(m)
            parts.append(s if c == 1 else f"{c}*{s}")
        return " + ".join(parts)


def multiply(a: Element, b: Element) -> Element:
    """Graded-commutative product with Koszul signs and truncation."""
    if a.algebra != b.algebra:
        raise ValueError("elements belong to different algebras")
    A = a.algebra
    terms: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, m = A.multiply_monomials(ma, mb)
            if m is not None:
                terms[m] = terms.get(m, 0) + sign * ca * cb
    return Element(A, terms)


def basis_of_degree(A: Algebra, d: int) -> list:
    return A.basis(d)


def top_degree(A: Algebra) -> int:
    return A.top_degree()


def poincare_dims(A: Algebra, n: int) -> dict[int, int]:
    return A.poincare_dims(n)
