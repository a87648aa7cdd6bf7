"""Exact sparse linear algebra over a prime field F_p.

Matrices carry labelled rows and columns (bar and cobar words, monomials)
and store only their nonzero entries.  Elimination is column-wise with a
fixed pivot order, so ranks and kernel bases are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

Label = Hashable
Vector = dict  # label -> nonzero residue


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FpScalar:
    value: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.value
        return int(other)

    def __add__(self, other):
        return FpScalar(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpScalar(self.value - self._coerce(other), self.p)

    def __mul__(self, other):
        return FpScalar(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def __truediv__(self, other):
        return FpScalar(self.value * inverse(self._coerce(other), self.p), self.p)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0


@dataclass(frozen=True)
class FpMatrix:
    """Sparse matrix over F_p with labelled basis index sets.

    ``entries`` maps ``(row_label, col_label)`` to a residue; zeros are
    dropped on construction.
    """

    p: int
    rows: tuple
    cols: tuple
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("row and column labels must be unique")
        row_set, col_set = set(rows), set(cols)
        clean = {}
        for (r, c), v in self.entries.items():
            if r not in row_set or c not in col_set:
                raise KeyError(f"entry ({r!r}, {c!r}) outside the labelled index sets")
            v = int(v) % self.p
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_columns(cls, p: int, rows: Sequence, cols: Sequence, columns: Mapping) -> "FpMatrix":
        """Build from ``{col_label: {row_label: value}}``."""
        entries = {}
        for c, vec in columns.items():
            for r, v in vec.items():
                key = (r, c)
                entries[key] = (entries.get(key, 0) + v) % p
        return cls(p, tuple(rows), tuple(cols), entries)

    @classmethod
    def from_rows(cls, p: int, data: Sequence[Sequence[int]]) -> "FpMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        entries = {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row)}
        return cls(p, tuple(range(nrows)), tuple(range(ncols)), entries)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def columns(self) -> dict:
        out = {c: {} for c in self.cols}
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def apply(self, vec: Mapping) -> dict:
        """Multiply by a sparse column vector keyed by column labels."""
        cols = self.columns()
        out: dict = {}
        for c, a in vec.items():
            if c not in cols:
                raise KeyError(f"unknown column label {c!r}")
            for r, v in cols[c].items():
                out[r] = (out.get(r, 0) + a * v) % self.p
        return {r: v for r, v in out.items() if v}

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ValueError("mixed moduli")
        if set(self.cols) != set(other.rows):
            raise ValueError("inner label sets differ")
        columns = {c: self.apply(vec) for c, vec in other.columns().items()}
        return FpMatrix.from_columns(self.p, self.rows, other.cols, columns)

    def is_zero(self) -> bool:
        return not self.entries


def _eliminate(M: FpMatrix, track: bool):
    """Column reduction.  Returns (pivots, kernel combinations).

    ``pivots`` maps a pivot row position to a reduced column whose lowest
    row position is that pivot with value 1; when ``track`` is set each
    reduced column also carries its combination of original columns.
    """
    p = M.p
    row_pos = {r: i for i, r in enumerate(M.rows)}
    pivots: dict[int, tuple[dict, dict]] = {}
    kernel: list[dict] = []
    cols = M.columns()
    for c in M.cols:
        vec = {row_pos[r]: v for r, v in cols[c].items()}
        combo = {c: 1} if track else None
        while vec:
            low = min(vec)
            if low not in pivots:
                scale = inverse(vec[low], p)
                vec = {k: v * scale % p for k, v in vec.items()}
                if track:
                    combo = {k: v * scale % p for k, v in combo.items()}
                pivots[low] = (vec, combo)
                break
            pvec, pcombo = pivots[low]
            f = vec[low]
            for k, v in pvec.items():
                nv = (vec.get(k, 0) - f * v) % p
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            if track:
                for k, v in pcombo.items():
                    nv = (combo.get(k, 0) - f * v) % p
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        else:
            if track:
                kernel.append(combo)
    return pivots, kernel


def rank(M: FpMatrix) -> int:
    pivots, _ = _eliminate(M, track=False)
    return len(pivots)


def kernel_basis(M: FpMatrix) -> list[dict]:
    """Basis of the null space, as sparse vectors keyed by column label."""
    _, kernel = _eliminate(M, track=True)
    return kernel


def image_membership(M: FpMatrix, v) -> tuple[bool, dict | None]:
    """Decide whether ``v`` lies in the column span of ``M``.

    ``v`` is either a mapping keyed by row labels or a sequence aligned
    with ``M.rows``.  Returns ``(True, preimage)`` or ``(False, None)``.
    """
    p = M.p
    if isinstance(v, Mapping):
        unknown = set(v) - set(M.rows)
        if unknown:
            raise ValueError(f"vector has labels outside the row set: {sorted(map(repr, unknown))}")
        target = {r: int(x) % p for r, x in v.items() if int(x) % p}
    else:
        v = list(v)
        if len(v) != len(M.rows):
            raise ValueError(f"vector has length {len(v)}, matrix has {len(M.rows)} rows")
        target = {r: int(x) % p for r, x in zip(M.rows, v) if int(x) % p}

    pivots, _ = _eliminate(M, track=True)
    row_pos = {r: i for i, r in enumerate(M.rows)}
    vec = {row_pos[r]: x for r, x in target.items()}
    pre: dict = {}
    while vec:
        low = min(vec)
        if low not in pivots:
            return False, None
        pvec, pcombo = pivots[low]
        f = vec[low]
        for k, x in pvec.items():
            nv = (vec.get(k, 0) - f * x) % p
            if nv:
                vec[k] = nv
            else:
                vec.pop(k, None)
        for k, x in pcombo.items():
            pre[k] = (pre.get(k, 0) + f * x) % p
    return True, {k: x for k, x in pre.items() if x}
