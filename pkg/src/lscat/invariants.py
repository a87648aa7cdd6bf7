"""Cup length, filtration weight and certified module-weight lower bounds.

The lower bound for the module category weight comes from a witness: a
loop-space class ``z`` with ``op(z) = x`` and a monomial ``mu`` such that,
in the level-m projective-space model, ``op(z*mu) = x*mu`` while any
Steenrod-equivariant retraction onto the group cohomology must send
``z*mu`` to zero.  :func:`verify_witness` records each condition that the
argument needs as a named boolean.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra, Monomial
from .coalgebra import DifferentialSpec
from .steenrod import ActionTable, Op, pessimistic_is_zero

CHECK_NAMES = ("survival", "nonvanishing", "degree-vanishing", "parity", "cross-term")


class PresentationError(RuntimeError):
    """Two independent computations of the same invariant disagree."""


@dataclass(frozen=True)
class ZClass:
    name: str
    degree: int
    weight: int = 1
    relations: tuple = ()  # ((Op, target generator name), ...)

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))

    def without_relation(self, op: Op, target: str) -> "ZClass":
        rels = tuple(r for r in self.relations if r != (op, target))
        return ZClass(self.name, self.degree, self.weight, rels)


def relation_issues(A: Algebra, z: ZClass) -> list[str]:
    out = []
    for op, target in z.relations:
        try:
            g = A.generator(target)
        except KeyError:
            out.append(f"{op}({z.name}) = {target}: target is not a generator")
            continue
        if z.degree + op.shift != g.degree:
            out.append(f"{op}({z.name}) = {target}: degrees {z.degree}+{op.shift} != {g.degree}")
    return out


# -- cup length and weight ------------------------------------------------


def cup_length_formula(A: Algebra) -> int:
    if not A.finite:
        raise ValueError("cup length of an infinite algebra is unbounded")
    return sum(int(g.height) - 1 for g in A.generators)


def cup_length_bruteforce(A: Algebra) -> int:
    """Largest exponent sum over all nonzero monomials."""
    ranges = [range(int(g.height)) for g in A.generators]
    best = 0
    for mono in itertools.product(*ranges):
        if A.is_nonzero(mono):
            best = max(best, sum(mono))
    return best


def cup_length(A: Algebra) -> int:
    """Cup length, computed in closed form and by exhaustive search."""
    closed = cup_length_formula(A)
    brute = cup_length_bruteforce(A)
    if closed != brute:
        raise PresentationError(f"cup length formula gives {closed}, enumeration gives {brute}")
    return closed


def wgt(A: Algebra) -> int:
    """Filtration length: maximal weighted exponent sum of a nonzero monomial."""
    if not A.finite:
        raise ValueError("weight of an infinite algebra is unbounded")
    return sum((int(g.height) - 1) * g.weight for g in A.generators)


def max_weight_monomials(A: Algebra) -> list[Monomial]:
    """Nonzero monomials whose weight equals :func:`wgt`.

    Weights are positive, so this is just the top monomial.
    """
    return [A.top_monomial()]


# -- projective space model ----------------------------------------------


@dataclass(frozen=True)
class ProjectiveModel:
    """Level-m algebraic model ``A^[m] + sum_z z*A^[m-1] + S_m``.

    ``S_m`` is opaque; the only fact used about it is that S_2 is
    concentrated in even degrees.
    """

    m: int
    algebra: Algebra
    zclasses: tuple = ()

    def in_truncation(self, mono: Monomial, level: int | None = None) -> bool:
        level = self.m if level is None else level
        return self.algebra.is_nonzero(mono) and self.algebra.weight(mono) <= level

    def in_z_summand(self, z: ZClass, mono: Monomial) -> bool:
        return any(z.name == w.name for w in self.zclasses) and self.in_truncation(mono, self.m - 1)

    @property
    def s_even(self) -> bool:
        return self.m == 2

    def truncation_dims(self, n: int) -> dict[int, int]:
        dims = {d: 0 for d in range(n + 1)}
        for mono in self.algebra.monomials_up_to(n):
            if self.in_truncation(mono):
                dims[self.algebra.degree(mono)] += 1
        return dims


# -- witnesses -----------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    z: ZClass
    op: Op
    x: str
    mu: Monomial


@dataclass
class WitnessCertificate:
    z: ZClass
    op: Op
    x: str
    mu: Monomial
    m: int
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    certified: bool = True  # False for exploratory levels beyond the fixed one

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def bound(self) -> int:
        return self.m + 1

    def describe(self, A: Algebra) -> str:
        mu = A.format_monomial(self.mu)
        return f"{self.op}({self.z.name}) = {self.x}, mu = {mu}, m = {self.m}"


@dataclass
class InvariantReport:
    cup: int
    wgt: int
    mwgt_lower: int
    certificate: WitnessCertificate | None = None
    fallback_reason: str | None = None
    certificates: list = field(default_factory=list)
    exploratory_m: int | None = None

    def __post_init__(self):
        if not self.cup <= self.wgt <= self.mwgt_lower:
            raise PresentationError(
                f"invariant chain violated: cup={self.cup}, wgt={self.wgt}, mwgt={self.mwgt_lower}"
            )


def _degree_screen(A: Algebra, zclasses: Sequence[ZClass]) -> str | None:
    """Fallback reason when no generator can be an operation on a z-class."""
    if not zclasses:
        return "no z-classes: nothing supports a differential"
    top_gen = max(g.degree for g in A.generators)
    low_z = min(z.degree for z in zclasses)
    if top_gen <= low_z:
        return (
            f"by degree: every generator has degree <= {top_gen} <= {low_z}, the lowest z-class, "
            "so no generator is a Steenrod operation on a z-class"
        )
    return None


def find_witness_candidates(A: Algebra, zclasses: Sequence[ZClass]) -> tuple[list[Candidate], str | None]:
    """Witness data ``(z, op, x, mu)`` with ``x*mu`` nonzero of maximal weight."""
    reason = _degree_screen(A, zclasses)
    if reason:
        return [], reason
    tops = max_weight_monomials(A)
    out = []
    for z in zclasses:
        for op, target in z.relations:
            if target not in A.names:
                continue
            g = A.generator(target)
            if g.degree <= z.degree:
                continue
            i = A.index(target)
            for top in tops:
                if top[i] >= 1:
                    mu = tuple(e - (1 if j == i else 0) for j, e in enumerate(top))
                    out.append(Candidate(z, op, target, mu))
    if not out:
        return [], "no relation op(z) = x lands on a generator of a maximal-weight monomial"
    return out, None


def _op_splittings(op: Op):
    """Pairs (on_z, on_mu) of (i, eps) with on_z != (0, 0), excluding the whole op on z."""
    for eps_z in range(op.bockstein + 1):
        for i_z in range(op.i + 1):
            on_z = (i_z, eps_z)
            on_mu = (op.i - i_z, op.bockstein - eps_z)
            if on_z == (0, 0) or on_mu == (0, 0):
                continue
            yield on_z, on_mu


def verify_witness(
    A: Algebra,
    table: ActionTable,
    z: ZClass,
    op: Op,
    x: str,
    mu: Monomial,
    m: int,
    *,
    strict: bool = False,
    differentials: Sequence[DifferentialSpec] = (),
) -> WitnessCertificate:
    """Evaluate the witness conditions at level m; never raises on failure."""
    if m < 1:
        raise ValueError("level m must be >= 1")
    mu = tuple(mu)
    model = ProjectiveModel(m, A, (z,))
    checks: dict[str, bool] = {}
    details: dict[str, str] = {}

    listed = (op, x) in z.relations and x in A.names
    if not listed:
        details["relation"] = f"{op}({z.name}) = {x} is not a listed relation"

    xi = A.index(x) if x in A.names else None
    xmu = None
    if xi is not None:
        xmu = tuple(e + (1 if j == xi else 0) for j, e in enumerate(mu))

    mu_ok = A.is_nonzero(mu)
    survival = (
        listed
        and mu_ok
        and model.in_z_summand(z, mu)
        and xmu is not None
        and A.weight(xmu) <= m
    )
    details["survival"] = (
        f"weight(mu) = {A.weight(mu) if mu_ok else 'n/a'} <= {m - 1}, "
        f"weight(x*mu) = {A.weight(xmu) if xmu is not None else 'n/a'} <= {m}"
    )
    if strict and survival:
        for d in differentials:
            if d.source != z.name:
                continue
            killed_weight = sum(e * A.generator(g).weight for g, e in d.target if g in A.names)
            if A.weight(mu) + killed_weight <= m:
                survival = False
                details["survival"] += f"; {d} kills z*mu at level {m}"
    checks["survival"] = bool(survival)

    top_w = wgt(A)
    nonvanishing = xmu is not None and A.is_nonzero(xmu) and A.weight(xmu) == top_w
    details["nonvanishing"] = (
        f"x*mu = {A.format_monomial(xmu)} has weight {A.weight(xmu)} (max {top_w})"
        if xmu is not None and A.is_nonzero(xmu)
        else "x*mu = 0"
    )
    checks["nonvanishing"] = bool(nonvanishing)

    zmu_deg = z.degree + A.degree(mu)
    empty = not A.basis(zmu_deg)
    checks["degree-vanishing"] = empty
    details["degree-vanishing"] = f"H^{zmu_deg} has dimension {len(A.basis(zmu_deg))}"

    x_deg = A.generator(x).degree if xi is not None else 0
    checks["parity"] = x_deg % 2 == 1
    details["parity"] = f"deg {x} = {x_deg}"

    cross = mu_ok
    failures = []
    if mu_ok:
        mu_el = A.mono(mu)
        if not pessimistic_is_zero(table, op, mu_el):
            cross = False
            failures.append(f"{op}(mu)")
        for (iz, ez), (im, em) in _op_splittings(op):
            part = Op(A.prime, im, em)
            if not pessimistic_is_zero(table, part, mu_el):
                cross = False
                failures.append(f"{part}(mu)")
    checks["cross-term"] = bool(cross)
    details["cross-term"] = "all vanish" if cross else "nonzero: " + ", ".join(failures)

    return WitnessCertificate(z, op, x, mu, m, checks, details)


def exploratory_level(A: Algebra, cand: Candidate, differentials: Sequence[DifferentialSpec]) -> int | None:
    """Largest m at which every check, strict survival included, still passes."""
    limits = []
    for d in differentials:
        if d.source == cand.z.name:
            kw = sum(e * A.generator(g).weight for g, e in d.target if g in A.names)
            limits.append(A.weight(cand.mu) + kw - 1)
    return min(limits) if limits else None


def mwgt_lower(
    A: Algebra,
    table: ActionTable,
    zclasses: Sequence[ZClass],
    *,
    strict: bool = False,
    exploratory: bool = False,
    differentials: Sequence[DifferentialSpec] = (),
) -> InvariantReport:
    """Lower bound for the module category weight with its certificate."""
    cup = cup_length(A)
    w = wgt(A)
    candidates, reason = find_witness_candidates(A, zclasses)
    certs = []
    for c in candidates:
        m = A.weight(c.mu) + c.z.weight + 1
        certs.append(
            verify_witness(A, table, c.z, c.op, c.x, c.mu, m, strict=strict, differentials=differentials)
        )
    valid = [c for c in certs if c.valid]
    best = max(valid, key=lambda c: c.bound, default=None)
    bound = max([w] + [c.bound for c in valid])
    if candidates and not valid:
        reason = "no candidate witness passed every check"
    report = InvariantReport(cup, w, bound, best, None if best else reason, certs)
    if exploratory and best is not None:
        cand = Candidate(best.z, best.op, best.x, best.mu)
        level = exploratory_level(A, cand, differentials)
        if level is not None:
            cert = verify_witness(
                A, table, best.z, best.op, best.x, best.mu, level, strict=True, differentials=differentials
            )
            if cert.valid:
                report.exploratory_m = level
    return report
