"""JSON form of a presentation, shared by catalog export and custom input.

Top-level fields: ``prime``, ``generators``, ``steenrod``, ``zClasses`` and
the optional ``coalgebra``, ``differentials`` and ``cotor`` (the E2 page
the differentials act on).  An infinite height is written as ``null``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import INF, Algebra, Element, Generator
from .coalgebra import Coalgebra, Cofactor, DifferentialSpec
from .invariants import ZClass
from .steenrod import ActionTable, Op, Unknown


class SchemaError(ValueError):
    """Input does not follow the presentation schema."""


@dataclass
class Presentation:
    algebra: Algebra
    table: ActionTable
    zclasses: tuple = ()
    coalgebra: Coalgebra | None = None
    differentials: tuple = ()
    cotor: Algebra | None = None
    label: str = "custom"
    extra: dict = field(default_factory=dict)


# -- encoding -------------------------------------------------------------


def _height(h):
    return None if h == INF else int(h)


def op_to_json(op: Op) -> dict:
    if op.prime == 2:
        return {"kind": "Sq", "i": op.i}
    return {"kind": "P", "i": op.i, "bockstein": op.bockstein}


def _generators(A: Algebra) -> list:
    return [{"name": g.name, "degree": g.degree, "height": _height(g.height), "weight": g.weight}
            for g in A.generators]


def _value(A: Algebra, val) -> list | str:
    if isinstance(val, Unknown):
        return "unknown"
    return [
        {"monomial": {A.names[i]: e for i, e in enumerate(m) if e}, "coeff": c}
        for m, c in sorted(val.terms.items(), reverse=True)
    ]


def presentation_to_json(pres: Presentation) -> dict:
    A = pres.algebra
    steenrod = [
        {"gen": gen, "op": op_to_json(op), "value": _value(A, val)}
        for (gen, op), val in sorted(pres.table.entries.items(), key=lambda kv: (A.index(kv[0][0]), kv[0][1]))
    ]
    out = {
        "label": pres.label,
        "prime": A.prime,
        "generators": _generators(A),
        "steenrod": steenrod,
        "zClasses": [
            {"name": z.name, "degree": z.degree, "weight": z.weight,
             "relations": [{"op": op_to_json(op), "target": t} for op, t in z.relations]}
            for z in pres.zclasses
        ],
    }
    if pres.coalgebra is not None:
        out["coalgebra"] = [
            {"name": c.name, "degree": c.degree, "kind": c.kind,
             **({"height": c.height} if c.kind == "truncated" else {})}
            for c in pres.coalgebra.cofactors
        ]
    if pres.differentials:
        out["differentials"] = [
            {"page": d.page, "source": d.source, "target": dict(d.target)} for d in pres.differentials
        ]
    if pres.cotor is not None:
        out["cotor"] = _generators(pres.cotor)
    out.update(pres.extra)
    return out


def entry_to_presentation(entry) -> Presentation:
    """Catalog entry as a presentation (stored Steenrod entries only)."""
    extra = {
        "group": entry.group,
        "expected": {k: v for k, v in entry.expected.items() if k != "witness"},
        "coverCohomology": entry.cover_cohomology,
        "notes": list(entry.notes),
    }
    return Presentation(
        entry.algebra, entry.raw_table, entry.zclasses, entry.loop_coalgebra,
        entry.differentials, entry.expected_cotor, entry.label, extra,
    )


def dumps(pres: Presentation) -> str:
    return json.dumps(presentation_to_json(pres), indent=2, sort_keys=False) + "\n"


# -- decoding -------------------------------------------------------------


def _need(obj: dict, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    return obj[key]


def op_from_json(obj, prime: int) -> Op:
    if isinstance(obj, str):
        return Op.parse(obj, prime)
    kind = _need(obj, "kind", "op")
    i = int(obj.get("i", 0))
    eps = int(obj.get("bockstein", 0))
    if kind == "Sq":
        if prime != 2:
            raise SchemaError(f"Sq operation at p={prime}")
        return Op(2, i)
    if kind in ("P", "beta"):
        if prime == 2:
            raise SchemaError("P or beta operation at p=2")
        return Op(prime, i, 1 if kind == "beta" else eps)
    raise SchemaError(f"unknown operation kind {kind!r}")


def _gens_from_json(rows, where: str) -> tuple:
    if not isinstance(rows, list):
        raise SchemaError(f"{where}: expected a list")
    gens = []
    for r in rows:
        h = r.get("height")
        gens.append(Generator(
            _need(r, "name", where), int(_need(r, "degree", where)),
            INF if h is None else int(h), int(r.get("weight", 1)),
        ))
    return tuple(gens)


def presentation_from_json(data: dict) -> Presentation:
    try:
        p = int(_need(data, "prime", "presentation"))
        A = Algebra(p, _gens_from_json(_need(data, "generators", "presentation"), "generators"))
        entries = {}
        for row in data.get("steenrod", []):
            gen = _need(row, "gen", "steenrod")
            op = op_from_json(_need(row, "op", "steenrod"), p)
            A.generator(gen)
            val = _need(row, "value", "steenrod")
            if val == "unknown":
                entries[(gen, op)] = Unknown(A.generator(gen).degree + op.shift)
            else:
                terms = {}
                for t in val:
                    m = A.monomial(_need(t, "monomial", "steenrod value"))
                    terms[m] = terms.get(m, 0) + int(t.get("coeff", 1))
                entries[(gen, op)] = Element(A, terms)
        zs = []
        for z in data.get("zClasses", []):
            rels = [(op_from_json(_need(r, "op", "relation"), p), _need(r, "target", "relation"))
                    for r in z.get("relations", [])]
            zs.append(ZClass(_need(z, "name", "zClasses"), int(_need(z, "degree", "zClasses")),
                             int(z.get("weight", 1)), rels))
        coalg = None
        if "coalgebra" in data:
            coalg = Coalgebra(p, tuple(
                Cofactor(_need(c, "name", "coalgebra"), int(_need(c, "degree", "coalgebra")),
                         _need(c, "kind", "coalgebra"), c.get("height"))
                for c in data["coalgebra"]
            ))
        diffs = tuple(
            DifferentialSpec.of(int(_need(d, "page", "differentials")), _need(d, "source", "differentials"),
                                _need(d, "target", "differentials"))
            for d in data.get("differentials", [])
        )
        cotor = Algebra(p, _gens_from_json(data["cotor"], "cotor")) if "cotor" in data else None
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc
    known = {"label", "prime", "generators", "steenrod", "zClasses", "coalgebra", "differentials", "cotor"}
    extra = {k: v for k, v in data.items() if k not in known}
    return Presentation(A, ActionTable(A, entries), tuple(zs), coalg, diffs, cotor,
                        data.get("label", "custom"), extra)


def loads(text: str) -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return presentation_from_json(data)


def load(path: str | Path) -> Presentation:
    return loads(Path(path).read_text())
