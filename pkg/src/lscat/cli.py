"""Command-line front end.

    lscat invariants --group F4 --prime 2
    lscat homology --mode cotor --group G2 --prime 2 --max-degree 16
    lscat verify --all
    lscat report --format markdown
    lscat export --group E8 --prime 3

Exit status is 0 on success (findings allowed), 1 when a verification
check fails and 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import os
import sys
from dataclasses import dataclass

from . import catalog
from .algebra import Algebra
from .coalgebra import (
    BigradedDims,
    bar_homology,
    cobar_homology,
    collapse_check,
    compare_dims,
    cotor_presentation,
    tor_presentation,
)
from .invariants import InvariantReport, WitnessCertificate, mwgt_lower
from .io import SchemaError, dumps, entry_to_presentation, load
from .steenrod import autofill

log = logging.getLogger("lscat")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "json", "csv", "markdown")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    prime: int | None = None
    all: bool = False
    max_degree: int = 20
    strict: bool = False
    exploratory: bool = False
    format: str = "text"
    input: str | None = None
    mode: str = "tor"
    output: str | None = None

    def __post_init__(self):
        if self.max_degree < 1:
            raise UsageError("--max-degree must be at least 1")

    def selected(self) -> list:
        if self.all:
            return catalog.entries()
        if self.group and self.prime:
            return [catalog.get(self.group, self.prime)]
        if self.group or self.prime:
            raise UsageError("--group and --prime must be given together")
        raise UsageError("select an entry with --group and --prime (or --all)")

    def one(self):
        if self.input is None:
            entries = self.selected()
            if len(entries) != 1:
                raise UsageError("this command takes a single entry")
            return entries[0]
        return None


def setup_logging() -> None:
    level = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("LSCAT_LOG", "quiet").lower(), logging.WARNING
    )
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


# -- rendering helpers ----------------------------------------------------


def certificate_json(A: Algebra, c: WitnessCertificate) -> dict:
    return {
        "z": c.z.name,
        "op": str(c.op),
        "x": c.x,
        "mu": A.format_monomial(c.mu),
        "m": c.m,
        "bound": c.bound,
        "valid": c.valid,
        "certified": c.certified,
        "checks": dict(c.checks),
        "details": dict(c.details),
    }


def report_json(A: Algebra, r: InvariantReport) -> dict:
    return {
        "cup": r.cup,
        "wgt": r.wgt,
        "mwgtLower": r.mwgt_lower,
        "certificate": certificate_json(A, r.certificate) if r.certificate else None,
        "fallback": r.fallback_reason,
        "candidates": [certificate_json(A, c) for c in r.certificates],
        "exploratoryM": r.exploratory_m,
    }


def render_table(header: list, rows: list, fmt: str) -> str:
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(map(str, header)) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    return "\n".join("  ".join(c[i].ljust(widths[i]) for i in range(len(header))).rstrip() for c in cells) + "\n"


def dims_rows(d: BigradedDims) -> list:
    return [[s, t, v] for (s, t), v in sorted(d.dims.items()) if v]


# -- commands -------------------------------------------------------------


def _invariant_inputs(cfg: RunConfig):
    entry = cfg.one()
    if entry is not None:
        return entry.label, entry.algebra, entry.table, entry.zclasses, entry.differentials
    pres = load(cfg.input)
    return pres.label, pres.algebra, autofill(pres.table), pres.zclasses, pres.differentials


def cmd_invariants(cfg: RunConfig, out) -> int:
    label, A, table, zs, diffs = _invariant_inputs(cfg)
    r = mwgt_lower(A, table, zs, strict=cfg.strict, exploratory=cfg.exploratory, differentials=diffs)
    if cfg.format == "json":
        out.write(json.dumps({"label": label, **report_json(A, r)}, indent=2) + "\n")
        return EXIT_OK
    out.write(f"{label}: cup={r.cup} wgt={r.wgt} mwgtLower={r.mwgt_lower}\n")
    if r.certificate:
        c = r.certificate
        out.write(f"certificate: {c.describe(A)} -> bound {c.bound}\n")
        for name, ok in c.checks.items():
            out.write(f"  {name:17s} {'ok' if ok else 'FAILED'}  {c.details.get(name, '')}\n")
    else:
        out.write(f"fallback: {r.fallback_reason}\n")
    if r.exploratory_m is not None:
        out.write(f"exploratory (not certified): checks still pass at m={r.exploratory_m}, "
                  f"bound {r.exploratory_m + 1}\n")
    return EXIT_OK


def cmd_homology(cfg: RunConfig, out) -> int:
    N = cfg.max_degree
    entry = cfg.one()
    comparisons = []  # (label, discrepancies, finding key)
    if cfg.mode == "tor":
        A = entry.algebra if entry else load(cfg.input).algebra
        dims = bar_homology(A, N)
        comparisons.append(("Kunneth form", compare_dims(dims, tor_presentation(A), N), None))
        if entry:
            comparisons.append(("stated loop coalgebra", compare_dims(dims, entry.loop_coalgebra, N),
                                "tor-vs-stated"))
    else:
        C = entry.loop_coalgebra if entry else load(cfg.input).coalgebra
        if C is None:
            raise UsageError("input has no coalgebra field")
        dims = cobar_homology(C, N)
        comparisons.append(("Kunneth form", compare_dims(dims, cotor_presentation(C), N), None))
        if entry:
            comparisons.append(("stated Cotor", compare_dims(dims, entry.expected_cotor, N), "cotor-vs-stated"))

    label = entry.label if entry else "custom"
    status = EXIT_OK
    verdicts = []
    for name, disc, key in comparisons:
        if not disc:
            verdicts.append((name, catalog.PASS, "match"))
        elif entry and (entry.group, entry.prime, key) in catalog.ALLOWED_FINDINGS:
            verdicts.append((name, catalog.FINDING, "; ".join(map(str, disc))))
        else:
            verdicts.append((name, catalog.FAIL, "; ".join(map(str, disc))))
            status = EXIT_FAIL
    if cfg.mode == "tor":
        even = collapse_check(dims)
        verdicts.append(("collapse", catalog.PASS if even else catalog.FINDING,
                         "even total degrees only" if even else "odd total degrees present"))

    if cfg.format == "json":
        out.write(json.dumps({
            "label": label, "mode": cfg.mode, "maxDegree": N,
            "dims": dims.to_json(), "totals": dims.totals(),
            "comparisons": [{"against": n, "status": s, "detail": d} for n, s, d in verdicts],
        }, indent=2) + "\n")
        return status
    if cfg.format == "text":
        out.write(f"{label}: {'Tor (bar)' if cfg.mode == 'tor' else 'Cotor (cobar)'} through degree {N}\n")
    out.write(render_table(["s", "degree", "dim"], dims_rows(dims), cfg.format))
    if cfg.format != "csv":
        out.write("\n")
        for n, s, d in verdicts:
            out.write(f"[{s}] {n}: {d}\n")
    return status


def cmd_verify(cfg: RunConfig, out) -> int:
    if cfg.max_degree < 12:
        raise UsageError("verify needs --max-degree >= 12")
    entries = catalog.entries() if cfg.all or not (cfg.group or cfg.prime) else cfg.selected()
    status = EXIT_OK
    payload = []
    for e in entries:
        rep = catalog.verify_entry(e, cfg.max_degree)
        if rep.failed:
            status = EXIT_FAIL
        payload.append(rep)
    if cfg.format == "json":
        out.write(json.dumps([
            {"label": r.entry.label, "failed": r.failed,
             "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in r.results]}
            for r in payload
        ], indent=2) + "\n")
        return status
    if cfg.format in ("csv", "markdown"):
        rows = [[r.entry.label, c.name, c.status, c.detail] for r in payload for c in r.results]
        out.write(render_table(["entry", "check", "status", "detail"], rows, cfg.format))
        return status
    for r in payload:
        counts = {s: sum(c.status == s for c in r.results) for s in (catalog.PASS, catalog.FINDING, catalog.FAIL)}
        out.write(f"{r.entry.label} (through degree {r.cutoff}): "
                  + ", ".join(f"{v} {k}" for k, v in counts.items()) + "\n")
        for c in r.results:
            out.write(f"  {c}\n")
    out.write("FAIL\n" if status else "OK\n")
    return status


def live_tables(strict: bool = False) -> dict:
    """Both summary tables computed from the catalog, with expected values."""
    reports = {(e.group, e.prime): (e, e.invariants(strict=strict)) for e in catalog.entries()}
    exp = catalog.expected_tables()
    mod2 = []
    diffs = []
    for g in catalog.GROUPS:
        r2 = reports[(g, 2)][1]
        r3 = reports[(g, 3)][1]
        e2 = exp["mod2"][g]
        ed = exp["differences"][g]
        mod2.append({"group": g, "cup": r2.cup, "wgt": r2.wgt, "mwgtLower": r2.mwgt_lower,
                     "expectedWgt": e2["wgt"], "expectedMwgtLower": e2["mwgt_lower"]})
        diffs.append({"group": g,
                      "wgtMinusCup3": r3.wgt - r3.cup,
                      "mwgtMinusWgt2": r2.mwgt_lower - r2.wgt,
                      "mwgtMinusWgt3": r3.mwgt_lower - r3.wgt,
                      "expected": [ed["wgt_minus_cup_3"], ed["mwgt_minus_wgt_2"], ed["mwgt_minus_wgt_3"]]})
    certs = {
        f"{e.label}": certificate_json(e.algebra, r.certificate) if r.certificate else None
        for (e, r) in reports.values()
    }
    return {"mod2": mod2, "differences": diffs, "certificates": certs}


def cmd_report(cfg: RunConfig, out) -> int:
    t = live_tables(cfg.strict)
    if cfg.format == "json":
        out.write(json.dumps(t, indent=2) + "\n")
        return EXIT_OK
    h1 = ["group", "cup", "wgt", "Mwgt >=", "expected wgt", "expected Mwgt >="]
    r1 = [[r["group"], r["cup"], r["wgt"], r["mwgtLower"], r["expectedWgt"], r["expectedMwgtLower"]]
          for r in t["mod2"]]
    h2 = ["group", "wgt-cup (p=3)", "Mwgt-wgt >= (p=2)", "Mwgt-wgt >= (p=3)", "expected"]
    r2 = [[r["group"], r["wgtMinusCup3"], r["mwgtMinusWgt2"], r["mwgtMinusWgt3"],
           "/".join(map(str, r["expected"]))] for r in t["differences"]]
    if cfg.format == "csv":
        out.write(render_table(["table"] + h1, [["mod2"] + r for r in r1], "csv"))
        out.write(render_table(["table"] + h2, [["differences"] + r for r in r2], "csv"))
        return EXIT_OK
    title = "## " if cfg.format == "markdown" else ""
    out.write(f"{title}Mod 2 invariants\n\n")
    out.write(render_table(h1, r1, cfg.format))
    out.write(f"\n{title}Differences\n\n")
    out.write(render_table(h2, r2, cfg.format))
    return EXIT_OK


def cmd_export(cfg: RunConfig, out) -> int:
    entry = cfg.one()
    if entry is None:
        raise UsageError("export takes --group and --prime")
    text = dumps(entry_to_presentation(entry))
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "report": cmd_report,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lscat", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, selector=True, input_=True):
        if selector:
            p.add_argument("--group", choices=catalog.GROUPS)
            p.add_argument("--prime", type=int, choices=catalog.PRIMES)
        if input_:
            p.add_argument("--input", help="custom presentation in JSON")
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("invariants", help="cup length, weight and certified Mwgt lower bound")
    common(p)
    p.add_argument("--strict", action="store_true", help="also require survival against differentials")
    p.add_argument("--exploratory", action="store_true", help="report the largest level where checks pass")

    p = sub.add_parser("homology", help="Tor by the bar complex or Cotor by the cobar complex")
    common(p)
    p.add_argument("--mode", choices=("tor", "cotor"), default="tor")
    p.add_argument("--max-degree", type=int, default=20)

    p = sub.add_parser("verify", help="cross-check catalog entries")
    common(p, input_=False)
    p.add_argument("--all", action="store_true")
    p.add_argument("--max-degree", type=int, default=20)

    p = sub.add_parser("report", help="both summary tables, computed live")
    common(p, selector=False, input_=False)
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("export", help="write a catalog entry as JSON")
    common(p, input_=False)
    p.add_argument("--output", "-o")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    setup_logging()
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(**vars(args))
        if cfg.input is not None and (cfg.group or cfg.prime):
            raise UsageError("--input cannot be combined with --group/--prime")
        return COMMANDS[cfg.command](cfg, out)
    except (UsageError, SchemaError, OSError) as exc:
        print(f"lscat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
