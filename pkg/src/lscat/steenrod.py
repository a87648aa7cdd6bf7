"""Partial Steenrod action tables and the Cartan formula.

Only the action on generators is stored; products are handled by the
Cartan formula.  Values the data does not determine are recorded as
:class:`Unknown` and carried symbolically, so that a zero test can
quantify over every possible value of the right degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .algebra import Algebra, Element


@dataclass(frozen=True, order=True)
class Op:
    """A basic operation: ``Sq^i`` at p=2, ``beta^e P^i`` at odd p."""

    prime: int
    i: int
    bockstein: int = 0

    def __post_init__(self):
        if self.i < 0 or self.bockstein not in (0, 1):
            raise ValueError(f"bad operation {self!r}")
        if self.prime == 2 and self.bockstein:
            raise ValueError("use Sq(1) for the Bockstein at p=2")
        if self.shift <= 0:
            raise ValueError("operation must raise degree")

    @property
    def shift(self) -> int:
        if self.prime == 2:
            return self.i
        return 2 * self.i * (self.prime - 1) + self.bockstein

    def __str__(self):
        if self.prime == 2:
            return f"Sq{self.i}"
        if self.bockstein and self.i == 0:
            return "b"
        return ("b" if self.bockstein else "") + f"P{self.i}"

    @classmethod
    def parse(cls, text: str, prime: int) -> "Op":
        """Parse ``Sq4``, ``P1``, ``bP1`` or ``b``."""
        t = text.strip()
        if t.startswith("Sq"):
            return cls(2, int(t[2:]))
        eps = 0
        if t.startswith("b"):
            eps, t = 1, t[1:]
        if not t:
            return cls(prime, 0, 1)
        if not t.startswith("P"):
            raise ValueError(f"cannot parse operation {text!r}")
        return cls(prime, int(t[1:]), eps)


def Sq(i: int) -> Op:
    return Op(2, i)


def P(i: int, prime: int = 3) -> Op:
    return Op(prime, i)


def BP(i: int, prime: int = 3) -> Op:
    return Op(prime, i, 1)


def beta(prime: int = 3) -> Op:
    return Op(prime, 0, 1)


@dataclass(frozen=True)
class Unknown:
    """Placeholder for an undetermined value of the given degree."""

    degree: int

    def __repr__(self):
        return f"Unknown({self.degree})"


@dataclass(frozen=True)
class Slot:
    """An undetermined value ``op(source)``; ``source`` may be a z-class."""

    source: str
    op: Op
    degree: int

    def __str__(self):
        return f"{self.op}({self.source})"


@dataclass(frozen=True)
class UnknownTerm:
    """``coefficient * slot_1 * ... * slot_k`` with the slots multiplied on the right."""

    coefficient: Element
    slots: tuple


@dataclass(frozen=True)
class ActionResult:
    known: Element
    unknown_terms: tuple = ()

    @property
    def fully_known(self) -> bool:
        return not self.unknown_terms

    def evaluate(self, values: Mapping[Slot, Element]) -> Element:
        """Substitute concrete values for every slot."""
        out = self.known
        for term in self.unknown_terms:
            v = term.coefficient
            for s in term.slots:
                v = v * values[s]
            out = out + v
        return out



def unstable_ops(A: Algebra, degree: int) -> list[Op]:
    """Positive-shift operations that can be nonzero on a class of this degree."""
    p = A.prime
    if p == 2:
        return [Op(2, i) for i in range(1, degree + 1)]
    ops = []
    for i in range(degree // 2 + 1):
        for eps in (0, 1):
            if (i, eps) != (0, 0) and 2 * i + eps <= degree:
                ops.append(Op(p, i, eps))
    return ops


def forced_value(A: Algebra, gen: str, op: Op) -> Element | None:
    """The value dictated by instability or degree reasons, else None."""
    g = A.generator(gen)
    p = A.prime
    x = A.gen(gen)
    if p == 2:
        if op.i > g.degree:
            return A.zero()
        if op.i == g.degree:
            return x * x
    else:
        if 2 * op.i + op.bockstein > g.degree:
            return A.zero()
        if op.bockstein == 0 and 2 * op.i == g.degree:
            return x ** p
    target = g.degree + op.shift
    if A.finite and (target > A.top_degree() or not A.basis(target)):
        return A.zero()
    return None


@dataclass(frozen=True)
class ActionTable:
    algebra: Algebra
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))

    @property
    def prime(self) -> int:
        return self.algebra.prime

    @classmethod
    def build(cls, A: Algebra, data: Mapping) -> "ActionTable":
        """Build from ``{(gen, "Sq2"): "x5" | Element | Unknown | 0}``."""
        entries = {}
        for (gen, op), val in data.items():
            if isinstance(op, str):
                op = Op.parse(op, A.prime)
            if isinstance(val, str):
                val = A.mono(val)
            elif isinstance(val, int) and val == 0:
                val = A.zero()
            entries[(gen, op)] = val
        return cls(A, entries)

    def value(self, gen: str, op: Op):
        """Stored value, else forced value, else :class:`Unknown`."""
        v = self.entries.get((gen, op))
        if v is not None:
            return v
        f = forced_value(self.algebra, gen, op)
        if f is not None:
            return f
        return Unknown(self.algebra.generator(gen).degree + op.shift)

    def known_entries(self) -> dict:
        return {k: v for k, v in self.entries.items() if isinstance(v, Element)}

    def unknown_entries(self) -> dict:
        return {k: v for k, v in self.entries.items() if isinstance(v, Unknown)}

    def without(self, keys: Iterable) -> "ActionTable":
        drop = set(keys)
        return ActionTable(self.algebra, {k: v for k, v in self.entries.items() if k not in drop})

    def with_entries(self, extra: Mapping) -> "ActionTable":
        return ActionTable(self.algebra, {**self.entries, **extra})


def autofill(table: ActionTable) -> ActionTable:
    """Add every entry forced by instability and degree vanishing; mark the rest unknown.

    Raises ValueError if a stored entry contradicts a forced value.
    """
    A = table.algebra
    entries = dict(table.entries)
    for g in A.generators:
        for op in unstable_ops(A, g.degree):
            forced = forced_value(A, g.name, op)
            stored = entries.get((g.name, op))
            if forced is not None:
                if isinstance(stored, Element) and stored != forced:
                    raise ValueError(f"{op}({g.name}) = {stored} contradicts forced value {forced}")
                entries[(g.name, op)] = forced
            elif stored is None:
                entries[(g.name, op)] = Unknown(g.degree + op.shift)
    return ActionTable(A, entries)


def _splits(A: Algebra, degree: int, i_left: int, eps_left: int):
    """(i, eps) pieces of the total operation that can act nontrivially on one factor."""
    p = A.prime
    for eps in range(eps_left + 1):
        for i in range(i_left + 1):
            if p == 2:
                if i > degree:
                    break
            elif 2 * i + eps > degree:
                break
            yield i, eps


def _slot_key(s: Slot):
    return (s.source, s.op.i, s.op.bockstein)


def _insert_slot(slots: tuple, new: Slot, p: int) -> tuple[tuple, int]:
    """Insert into canonical order, returning the Koszul sign of the move."""
    pos = len(slots)
    while pos > 0 and _slot_key(slots[pos - 1]) > _slot_key(new):
        pos -= 1
    passed = sum(s.degree for s in slots[pos:])
    sign = -1 if (p != 2 and new.degree % 2 and passed % 2) else 1
    return slots[:pos] + (new,) + slots[pos:], sign


def cartan_factors(table: ActionTable, op: Op, factors: Sequence[str]) -> ActionResult:
    """Apply ``op`` to the ordered product of the named generators.

    The product is formal: it is never reduced before the operation acts,
    so this also evaluates ``op`` on products that vanish in the algebra.
    """
    return cartan_all(table, op, factors)[(op.i, op.bockstein)]


def cartan_all(table: ActionTable, op: Op, factors: Sequence[str]) -> dict:
    """Results of every ``P^i beta^e`` with ``i <= op.i``, ``e <= op.bockstein`` in one pass."""
    A = table.algebra
    p = A.prime
    degs = [A.generator(f).degree for f in factors]
    # state: (i used, bockstein used, slots) -> coefficient; slots sit to the right
    states: dict = {(0, 0, ()): A.one()}
    for k, f in enumerate(factors):
        before = sum(degs[:k])
        new: dict = {}
        for (iu, eu, slots), coef in states.items():
            slot_deg = sum(s.degree for s in slots)
            for i, eps in _splits(A, degs[k], op.i - iu, op.bockstein - eu):
                if (i, eps) == (0, 0):
                    val = A.gen(f)
                else:
                    val = table.value(f, Op(p, i, eps))
                sign = -1 if (p != 2 and eps and before % 2) else 1
                if isinstance(val, Unknown):
                    new_slots, swap = _insert_slot(slots, Slot(f, Op(p, i, eps), val.degree), p)
                    key = (iu + i, eu + eps, new_slots)
                    term = coef.scale(sign * swap)
                else:
                    if val.is_zero():
                        continue
                    key = (iu + i, eu + eps, slots)
                    vdeg = degs[k] + (Op(p, i, eps).shift if (i, eps) != (0, 0) else 0)
                    if p != 2 and (vdeg * slot_deg) % 2:
                        sign = -sign
                    term = (coef * val).scale(sign)
                if term.is_zero():
                    continue
                new[key] = new[key] + term if key in new else term
        states = {k: v for k, v in new.items() if not v.is_zero()}
    known: dict = {}
    unknown: dict = {}
    for (iu, eu, slots), coef in states.items():
        if slots:
            bucket = unknown.setdefault((iu, eu), {})
            bucket[slots] = bucket[slots] + coef if slots in bucket else coef
        else:
            known[(iu, eu)] = known[(iu, eu)] + coef if (iu, eu) in known else coef
    out = {}
    for i in range(op.i + 1):
        for eps in range(op.bockstein + 1):
            bucket = unknown.get((i, eps), {})
            terms = tuple(
                UnknownTerm(c, sl) for sl, c in sorted(bucket.items(), key=lambda kv: str(kv[0])) if c
            )
            out[(i, eps)] = ActionResult(known.get((i, eps), A.zero()), terms)
    return out


def factors_of(A: Algebra, mono) -> list[str]:
    out = []
    for e, g in zip(mono, A.generators):
        out.extend([g.name] * e)
    return out


def cartan_apply(table: ActionTable, op: Op, e: Element) -> ActionResult:
    """Full Cartan expansion of ``op(e)`` for a homogeneous element."""
    if not e.is_homogeneous():
        raise ValueError("cartan_apply needs a homogeneous element")
    A = table.algebra
    known = A.zero()
    unknown: dict = {}
    for mono, c in e.terms.items():
        res = cartan_factors(table, op, factors_of(A, mono))
        known = known + res.known.scale(c)
        for t in res.unknown_terms:
            coef = t.coefficient.scale(c)
            unknown[t.slots] = unknown[t.slots] + coef if t.slots in unknown else coef
    terms = tuple(UnknownTerm(c, s) for s, c in sorted(unknown.items(), key=lambda kv: str(kv[0])) if c)
    return ActionResult(known, terms)


def term_vanishes_universally(A: Algebra, term: UnknownTerm) -> bool:
    """True if the term is 0 whatever values (of the right degrees) its slots take."""
    current = {term.coefficient} if not term.coefficient.is_zero() else set()
    for slot in term.slots:
        basis = A.basis(slot.degree) if slot.degree <= _top(A) else []
        nxt = set()
        for c in current:
            for b in basis:
                v = c * A.mono(b)
                if not v.is_zero():
                    nxt.add(v)
        current = nxt
        if not current:
            return True
    return not current


def _top(A: Algebra) -> int:
    return A.top_degree() if A.finite else 10**9


def result_is_zero(A: Algebra, res: ActionResult) -> bool:
    return res.known.is_zero() and all(term_vanishes_universally(A, t) for t in res.unknown_terms)


def pessimistic_is_zero(table: ActionTable, op: Op, e: Element) -> bool:
    """Is ``op(e)`` zero for every completion of the unknown table entries?"""
    return result_is_zero(table.algebra, cartan_apply(table, op, e))


def validate(table: ActionTable) -> list[str]:
    """Check stored entries against the axioms; returns a list of violations."""
    A = table.algebra
    p = A.prime
    problems = []
    for (gen, op), val in sorted(table.entries.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        try:
            g = A.generator(gen)
        except KeyError:
            problems.append(f"{op}({gen}): unknown generator")
            continue
        if op.prime != p:
            problems.append(f"{op}({gen}): operation for the wrong prime")
            continue
        target = g.degree + op.shift
        if isinstance(val, Unknown):
            if val.degree != target:
                problems.append(f"{op}({gen}): unknown of degree {val.degree}, expected {target}")
            continue
        if not val.is_zero() and val.degrees() != {target}:
            problems.append(f"{op}({gen}) = {val}: not homogeneous of degree {target}")
        forced = forced_value(A, gen, op)
        if forced is not None and forced != val:
            problems.append(f"{op}({gen}) = {val} violates the unstable axioms (forced {forced})")

    # beta o beta = 0 (Sq1 Sq1 = 0 at p=2)
    first = Sq(1) if p == 2 else beta(p)
    for g in A.generators:
        val = table.value(g.name, first)
        if isinstance(val, Element) and not val.is_zero():
            res = cartan_apply(table, first, val)
            if res.fully_known and not res.known.is_zero():
                problems.append(f"{first}{first}({g.name}) = {res.known}, should be 0")

    # Cartan consistency with the truncation relations g^h = 0
    if A.finite:
        top = A.top_degree()
        for g in A.generators:
            h = int(g.height)
            base = h * g.degree
            ops = _ops_up_to(p, top - base)
            if not ops:
                continue
            widest = Op(p, max(o.i for o in ops), 0 if p == 2 else 1)
            results = cartan_all(table, widest, [g.name] * h)
            for op in ops:
                res = results[(op.i, op.bockstein)]
                if res.fully_known and not res.known.is_zero():
                    problems.append(f"{op}({g.name}^{h}) = {res.known} by Cartan, but {g.name}^{h} = 0")
    return problems


def _ops_up_to(p: int, max_shift: int) -> list[Op]:
    ops = []
    if p == 2:
        return [Op(2, i) for i in range(1, max_shift + 1)]
    for i in range(max_shift // (2 * (p - 1)) + 1):
        for eps in (0, 1):
            if (i, eps) != (0, 0) and 2 * i * (p - 1) + eps <= max_shift:
                ops.append(Op(p, i, eps))
    return ops


def random_completion(table: ActionTable, slots: Iterable[Slot], rng) -> dict:
    """Random values for the given slots, each a combination of basis monomials."""
    A = table.algebra
    out = {}
    for s in slots:
        basis = A.basis(s.degree) if s.degree <= _top(A) else []
        terms = {b: rng.randrange(A.prime) for b in basis}
        out[s] = A.element(terms)
    return out


def all_slots(res: ActionResult) -> set:
    return set(itertools.chain.from_iterable(t.slots for t in res.unknown_terms))
