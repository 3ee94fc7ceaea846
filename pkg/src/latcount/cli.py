"""Command-line front end: count tables, class enumeration, verification.

Exit codes: 0 success (and verification agreement), 1 verification mismatch,
2 usage error, 3 size guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import formulas, oracle
from .canon import canonical_digraph
from .poset import Lattice, as_lattice, build_poset, classify_elements, nullity, _bits
from .reduction import classify_fbb

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SCALE = 3


# --------------------------------------------------------------------------
# Lattice documents: the JSON interchange schema.
# {"n": int, "covers": [[lo, hi], ...], "red": [int], "nullity": int,
#  "fbb": "F1|F2|F3|F4|M2" or null} with covers sorted ascending.
# --------------------------------------------------------------------------


def lattice_document(l: Lattice) -> dict:
    cls = classify_elements(l)
    fbb = classify_fbb(l).value if len(cls.red) in (2, 3) else None
    return {
        "n": l.n,
        "covers": [list(c) for c in sorted(l.covers)],
        "red": sorted(cls.red),
        "nullity": nullity(l.digraph),
        "fbb": fbb,
    }


def document_json(doc: dict) -> str:
    return json.dumps(doc)


def document_to_lattice(doc: dict) -> Lattice:
    return as_lattice(
        build_poset(doc["n"], [(int(a), int(b)) for a, b in doc["covers"]])
    )


def dot_digraph(l: Lattice, name: str) -> str:
    """A DOT digraph whose ranks follow element height, covers drawn upward."""
    up = l.digraph.up_adjacency()
    dn = l.digraph.down_adjacency()
    indeg = [bin(dn[v]).count("1") for v in range(l.n)]
    queue = [v for v in range(l.n) if indeg[v] == 0]
    height = [0] * l.n
    while queue:
        v = queue.pop()
        for w in _bits(up[v]):
            height[w] = max(height[w], height[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for h in range(max(height) + 1 if l.n else 0):
        level = [str(v) for v in range(l.n) if height[v] == h]
        if level:
            lines.append("  { rank=same; " + "; ".join(level) + "; }")
    for a, b in sorted(l.covers):
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# Subcommands.
# --------------------------------------------------------------------------


def _cmd_count(args, parser) -> int:
    if args.reducible == 2:
        value = formulas.two_reducible_lattices(args.n, args.form)
    else:
        if args.form != "block_first":
            parser.error("--form applies only to --reducible 2")
        value = formulas.three_reducible_lattices(args.n)
    print(value)
    return EXIT_OK


def _table_rows(reducible: int, n_from: int, n_to: int) -> list[dict]:
    rows = []
    for n in range(n_from, n_to + 1):
        if reducible == 2:
            rows.append({"n": n, "total": formulas.two_reducible_lattices(n)})
        else:
            rows.append(
                {
                    "n": n,
                    "l1": formulas.l1_lattices(n),
                    "l2": formulas.l2_lattices(n),
                    "l3": formulas.l3_lattices(n),
                    "l4": formulas.l4_lattices(n),
                    "total": formulas.three_reducible_lattices(n),
                }
            )
    return rows


def _print_rows(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows))
        return
    columns = list(rows[0]) if rows else []
    print(",".join(columns))
    for row in rows:
        print(",".join(str(row[c]) for c in columns))


def _cmd_table(args, parser) -> int:
    if args.n_from > args.n_to:
        parser.error("--n-from must not exceed --n-to")
    _print_rows(_table_rows(args.reducible, args.n_from, args.n_to), args.format)
    return EXIT_OK


def _cmd_blocks(args, parser) -> int:
    if args.m_from > args.m_to:
        parser.error("--m-from must not exceed --m-to")
    rows = []
    for m in range(args.m_from, args.m_to + 1):
        ks = [args.k] if args.k is not None else range(0, max(m - 3, 1))
        rows.append(
            {
                "m": m,
                "two_reducible": sum(formulas.two_reducible_blocks(m, k) for k in ks),
                "b1": sum(formulas.b1_blocks(m, k) for k in ks),
                "b2": sum(formulas.b2_blocks(m, k) for k in ks),
                "b3": sum(formulas.b3_blocks(m, k) for k in ks),
                "b4": sum(formulas.b4_blocks(m, k) for k in ks),
            }
        )
    _print_rows(rows, args.format)
    return EXIT_OK


def _cmd_enumerate(args, parser) -> int:
    members = oracle.reducible_class(args.n, args.reducible, workers=args.workers)
    ordered = [
        as_lattice(canonical_digraph(lat.digraph))
        for _, lat in sorted(members.items())
    ]
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        chunks: list[str] = []
        if args.format == "json":
            chunks = [document_json(lattice_document(lat)) for lat in ordered]
        elif args.format == "dot":
            chunks = [
                dot_digraph(lat, f"lattice_{i}") for i, lat in enumerate(ordered)
            ]
        else:  # edges: one "lo hi" line per cover, blank line between lattices
            chunks = [
                "\n".join(f"{a} {b}" for a, b in sorted(lat.covers))
                for lat in ordered
            ]
        if chunks:
            sink.write("\n\n".join(chunks) if args.format != "json" else "\n".join(chunks))
            sink.write("\n")
    finally:
        if args.out:
            sink.close()
    print(len(ordered), file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args, parser) -> int:
    reports = oracle.verify(args.n_max, workers=args.workers)
    pairs = list(zip(reports[0::2], reports[1::2]))
    mismatched = 0
    for formula_report, oracle_report in pairs:
        for name, agree in formula_report.agreement.items():
            f_val = formula_report.per_class.get(
                name, formula_report.block_strata.get(name, "-")
            )
            o_val = oracle_report.per_class.get(
                name, oracle_report.block_strata.get(name, "-")
            )
            status = "OK" if agree else "MISMATCH"
            print(f"n={formula_report.n} {name}: formula={f_val} oracle={o_val} {status}")
            if not agree:
                mismatched += 1
                for covers in formula_report.witnesses.get(name, []):
                    print(f"  witness covers: {covers}")
    ok = mismatched == 0
    print(f"verify: {'all cells agree' if ok else f'{mismatched} cells disagree'}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([asdict(r) for r in reports], fh)
    return EXIT_OK if ok else EXIT_MISMATCH


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latcount",
        description="Exact counts and exhaustive enumeration of finite "
        "lattices with exactly 2 or 3 reducible elements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print one exact class count")
    count.add_argument("--reducible", type=int, choices=(2, 3), required=True)
    count.add_argument("--n", type=int, required=True)
    count.add_argument(
        "--form",
        choices=("thakare", "block_first"),
        default="block_first",
        help="which of the two equivalent 2-reducible sums to evaluate",
    )
    count.set_defaults(func=_cmd_count)

    table = sub.add_parser("table", help="per-n count table")
    table.add_argument("--reducible", type=int, choices=(2, 3), required=True)
    table.add_argument("--n-from", type=int, required=True)
    table.add_argument("--n-to", type=int, required=True)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.set_defaults(func=_cmd_table)

    blocks = sub.add_parser("blocks", help="per-family maximal block counts")
    blocks.add_argument("--m-from", type=int, required=True)
    blocks.add_argument("--m-to", type=int, required=True)
    blocks.add_argument(
        "--k", type=int, default=None, help="restrict to one edge-surplus stratum"
    )
    blocks.add_argument("--format", choices=("csv", "json"), default="csv")
    blocks.set_defaults(func=_cmd_blocks)

    enum = sub.add_parser("enumerate", help="emit every lattice of a class")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--reducible", type=int, choices=(2, 3), required=True)
    enum.add_argument("--format", choices=("json", "dot", "edges"), default="json")
    enum.add_argument("--out", default=None, help="write documents to a file")
    enum.add_argument("--workers", type=int, default=1)
    enum.set_defaults(func=_cmd_enumerate)

    verify = sub.add_parser("verify", help="check every formula against the oracle")
    verify.add_argument("--n-max", type=int, required=True)
    verify.add_argument("--json", default=None, help="also write a JSON report")
    verify.add_argument("--workers", type=int, default=1)
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except oracle.SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
