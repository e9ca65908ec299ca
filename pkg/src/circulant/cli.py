"""Command-line front end: ``circulant analyze|witness|table|audit|betti``.

Exit codes: 0 success (audits with discrepancies included), 2 invalid input,
3 size bound exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from .chordal import (
    find_chordless_cycle,
    is_chordal,
    is_chordal_structural,
    validate_witness,
)
from .core import CirculantGraph, all_connection_sets, build, cycle_power
from .matching import (
    DEFAULT_ORACLE_MAX_N,
    TooLargeError,
    audit,
    audit_summary,
    induced_matching_formula,
    induced_matching_oracle,
)
from .regularity import DEFAULT_MAX_N, hochster_betti

EXIT_INVALID = 2
EXIT_TOO_LARGE = 3
EXIT_INTERNAL = 4


class InvariantViolation(RuntimeError):
    pass


def parse_set(text: str) -> List[int]:
    """Parse ``2,3,4,7`` or ``1-4`` (or a mix) into a list of ints."""
    out: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            lo_i, hi_i = int(lo), int(hi)
            if lo_i > hi_i:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo_i, hi_i + 1))
        else:
            out.append(int(part))
    return out


def render_set(S: Sequence[int], sep: str = "+") -> str:
    return sep.join(map(str, S))


def graph_label(G: CirculantGraph) -> str:
    return f"C_{G.n}({{{','.join(map(str, G.S))}}})"


@dataclass
class AnalyzeResult:
    n: int
    S: List[int]
    connected: bool
    component_count: int
    chordal_structural: bool
    chordal_oracle: bool
    witness: Optional[dict]
    nu_formula: int
    nu_oracle: Optional[int]
    regularity: Optional[int]
    field_char: Optional[int]


def analyze(G: CirculantGraph, witness: bool = False, oracle: bool = False,
            reg: bool = False, char: int = 2, jobs: int = 1) -> AnalyzeResult:
    structural = is_chordal_structural(G)
    generic = is_chordal(G)
    if structural != generic:
        raise InvariantViolation(f"{G}: structural chordality {structural} != oracle {generic}")
    w = None
    if witness and not generic:
        cyc = find_chordless_cycle(G)
        # independent re-check before anything is emitted
        if cyc is None or not validate_witness(G, cyc.vertices):
            raise InvariantViolation(f"{G}: witness failed validation")
        w = {"vertices": list(cyc.vertices), "strategy": cyc.strategy}
    nu_oracle = induced_matching_oracle(G)[0] if oracle else None
    regularity = hochster_betti(G, char, jobs=jobs).regularity if reg else None
    return AnalyzeResult(
        n=G.n,
        S=list(G.S),
        connected=G.component_count() == 1,
        component_count=G.component_count(),
        chordal_structural=structural,
        chordal_oracle=generic,
        witness=w,
        nu_formula=induced_matching_formula(G).nu_formula,
        nu_oracle=nu_oracle,
        regularity=regularity,
        field_char=char if reg else None,
    )


def _emit_rows(header: Sequence[str], rows: Sequence[Sequence], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    cells = [list(map(str, header))] + [["" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(header))]
    for row in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _csv_value(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return x


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args, out) -> int:
    G = build(args.n, parse_set(args.set))
    result = analyze(G, witness=args.witness, oracle=args.oracle, reg=args.reg,
                     char=args.char, jobs=args.jobs)
    data = asdict(result)
    if args.format == "json":
        out.write(json.dumps(data) + "\n")
    elif args.format == "csv":
        header = list(data)
        row = []
        for key in header:
            value = data[key]
            if key == "S":
                value = render_set(value)
            elif key == "witness" and value is not None:
                value = f"{value['strategy']}:{render_set(value['vertices'], ' ')}"
            row.append(_csv_value(value))
        _emit_rows(header, [row], "csv", out)
    else:
        out.write(f"graph: {graph_label(G)}\n")
        for key, value in data.items():
            if key in ("n", "S"):
                continue
            if key == "witness" and value is not None:
                value = f"{value['vertices']} ({value['strategy']})"
            out.write(f"{key}: {value}\n")
    return 0


def table_rows(min_n: int, max_n: int, oracle: bool, reg: bool, char: int = 2,
               jobs: int = 1) -> List[dict]:
    """One row per proper cycle power C_n(1..d), 1 <= d < n//2."""
    if reg and max_n > DEFAULT_MAX_N:
        raise TooLargeError(f"max_n={max_n} exceeds the Betti bound {DEFAULT_MAX_N}")
    if oracle and max_n > DEFAULT_ORACLE_MAX_N:
        raise TooLargeError(f"max_n={max_n} exceeds the oracle bound {DEFAULT_ORACLE_MAX_N}")
    rows = []
    for n in range(min_n, max_n + 1):
        for d in range(1, n // 2):
            G = cycle_power(n, d)
            rows.append({
                "graph": graph_label(G),
                "n": n,
                "d": d,
                "nu_formula": induced_matching_formula(G).nu_formula,
                "nu_oracle": induced_matching_oracle(G)[0] if oracle else None,
                "reg": hochster_betti(G, char, jobs=jobs).regularity if reg else None,
            })
    return rows


def cmd_table(args, out) -> int:
    rows = table_rows(args.min_n, args.max_n, args.oracle, args.reg, args.char, args.jobs)
    if args.format == "json":
        out.write(json.dumps({"characteristic": args.char, "rows": rows}) + "\n")
        return 0
    header = ["graph", "n", "d", "nu_formula", "nu_oracle", "reg"]
    if args.format == "csv":
        # braces and commas are not CSV-safe
        body = [[f"C{r['n']}({render_set(range(1, r['d'] + 1))})"]
                + [_csv_value(r[k]) for k in header[1:]] for r in rows]
    else:
        body = [[r[k] for k in header] for r in rows]
    _emit_rows(header, body, args.format, out)
    return 0


def chordality_audit(n_values, witness: bool = False) -> List[dict]:
    rows = []
    for n in n_values:
        for S in all_connection_sets(n):
            G = build(n, S)
            row = {"n": n, "S": list(G.S), "structural": is_chordal_structural(G),
                   "oracle": is_chordal(G)}
            row["agree"] = row["structural"] == row["oracle"]
            if witness:
                w = None if row["oracle"] else find_chordless_cycle(G)
                row["witness_strategy"] = None if w is None else w.strategy
                row["witness_valid"] = None if w is None else validate_witness(G, w)
            rows.append(row)
    return rows


def cmd_audit(args, out) -> int:
    n_values = range(args.min_n, args.max_n + 1)
    if args.mode == "chordality":
        rows = chordality_audit(n_values, witness=args.witness)
        summary = {"rows": len(rows), "disagree": sum(not r["agree"] for r in rows),
                   "non_chordal": sum(not r["oracle"] for r in rows)}
        if args.witness:
            summary["invalid_witnesses"] = sum(r["witness_valid"] is False for r in rows)
        header = list(rows[0]) if rows else ["n", "S", "structural", "oracle", "agree"]
    else:
        audit_rows = audit(n_values, args.mode, folded=args.folded, jobs=args.jobs)
        rows = [{"n": r.n, "S": list(r.S), "nu_formula": r.nu_formula,
                 "nu_oracle": r.nu_oracle, "agree": r.agree, "status": r.status,
                 "table1_family": r.table1_family} for r in audit_rows]
        summary = audit_summary(audit_rows)
        header = ["n", "S", "nu_formula", "nu_oracle", "agree", "status", "table1_family"]
    if args.only_discrepancies:
        key = "agree"
        rows = [r for r in rows if r[key] is False]
    if args.format == "json":
        out.write(json.dumps({"mode": args.mode, "rows": rows, "summary": summary}) + "\n")
    else:
        body = [[render_set(r[k]) if k == "S" else _csv_value(r[k]) if args.format == "csv"
                 else r[k] for k in header] for r in rows]
        _emit_rows(header, body, args.format, out)
        line = "summary: " + " ".join(f"{k}={v}" for k, v in summary.items())
        if args.format == "csv":
            print(line, file=sys.stderr)
        else:
            out.write(line + "\n")
    return 0


def cmd_betti(args, out) -> int:
    G = build(args.n, parse_set(args.set))
    table = hochster_betti(G, args.char, symmetry=not args.no_symmetry, jobs=args.jobs)
    if args.format == "json":
        doc = {"n": G.n, "S": list(G.S)}
        doc.update(table.to_dict())
        out.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        _emit_rows(["i", "j", "beta"], table.sorted_entries(), "csv", out)
    else:
        out.write(f"graph: {graph_label(G)}  characteristic: {table.characteristic}\n")
        out.write(table.diagram() + "\n")
        out.write(f"regularity: {table.regularity}\n")
    return 0


# ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--set", default="", help="connection set, e.g. 2,3,4,7 or 1-4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circulant", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("analyze", "witness"):
        p = sub.add_parser(name, help="chordality, components and induced matching of C_n(S)"
                           if name == "analyze" else "same as analyze --witness")
        _graph_args(p)
        _common(p)
        p.add_argument("--witness", action="store_true", default=name == "witness",
                       help="emit a chordless cycle for non-chordal graphs")
        p.add_argument("--oracle", action="store_true", help="exact induced matching number")
        p.add_argument("--reg", action="store_true", help="regularity via Hochster's formula")
        p.add_argument("--char", type=int, default=2, help="field characteristic")
        p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="nu and regularity of the cycle powers C_n(1..d)")
    p.add_argument("--max-n", type=int, default=15)
    p.add_argument("--min-n", type=int, default=6)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--reg", action="store_true")
    p.add_argument("--char", type=int, default=2)
    _common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", help="formula vs oracle, or structural vs generic chordality")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=None)
    p.add_argument("--mode", choices=("all-sets", "cycle-powers", "chordality"),
                   default="all-sets")
    p.add_argument("--folded", action="store_true",
                   help="test r+a against S by labelling distance")
    p.add_argument("--witness", action="store_true", help="chordality mode: build witnesses")
    p.add_argument("--only-discrepancies", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("betti", help="graded Betti numbers of the edge ring")
    _graph_args(p)
    p.add_argument("--char", type=int, default=2)
    p.add_argument("--no-symmetry", action="store_true", help="skip rotation-orbit reduction")
    _common(p)
    p.set_defaults(func=cmd_betti)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "min_n", 0) is None:
        args.min_n = 4 if args.mode == "chordality" else 2
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    buffer = io.StringIO()
    try:
        code = args.func(args, buffer)
    except TooLargeError as exc:
        print(f"circulant: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ValueError as exc:
        print(f"circulant: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvariantViolation, RuntimeError) as exc:
        print(f"circulant: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    out.write(buffer.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
