"""Command-line front end: census, oracle, verify, lookup, and render.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success (and full
verification), 1 verification mismatch, 2 usage or parse error, 3 resource
limit (node cap or count budget).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .census import (
    Catalog,
    CensusEntry,
    CensusReport,
    build_census,
    class_lookup,
    compare_census,
    load_catalog,
    oracle_census,
    verify_against_catalog,
)
from .core import ArcMatrix, ClassId, ResourceLimitError
from .monomial import Monomial, monomial_to_matrix, parse_monomial, print_monomial

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

CSV_COLUMNS = ["p", "d", "rank", "cardinality", "aut_order", "weight", "monomial"]


def emit_dot(matrix: ArcMatrix) -> str:
    """Graphviz text for a multigraph; parallel arcs and loops repeat statements.

    Nodes are named n1..np to avoid bare-integer ambiguity downstream; the
    null multigraph renders with an intentionally blank body.
    """
    lines = ["digraph class {"]
    lines.extend(f"  n{i};" for i in range(1, matrix.p + 1))
    for i, row in enumerate(matrix.entries, start=1):
        for j, mult in enumerate(row, start=1):
            lines.extend(f"  n{i} -> n{j};" for _ in range(mult))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _monomial_text(mono: Monomial) -> str:
    style = "compact" if mono.max_node() <= 9 else "bracket"
    return print_monomial(mono, style)


def _catalog_rank_map(report: CensusReport) -> dict[int, int]:
    """Computed rank -> catalog rank, via the bundled catalog (empty off-catalog)."""
    if report.d != 2:
        return {}
    catalog = load_catalog()
    if not catalog.for_p(report.p):
        return {}
    verification = verify_against_catalog(report, catalog)
    ranks = {m.entry.rank: m.record.rank for m in verification.matched}
    ranks.update({c.entry.rank: c.record.rank for c in verification.corrected})
    return ranks


def render_census_csv(report: CensusReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for entry in report.entries:
        writer.writerow(
            [
                report.p,
                report.d,
                entry.rank,
                entry.cardinality,
                entry.aut_order,
                entry.weight,
                _monomial_text(entry.representative),
            ]
        )
    return buf.getvalue()


def parse_census_csv(text: str) -> CensusReport:
    """Rebuild a CensusReport from render_census_csv output (lossless)."""
    reader = csv.reader(text.splitlines())
    header = next(reader)
    if header != CSV_COLUMNS:
        raise ValueError(f"unexpected census CSV header: {header!r}")
    entries = []
    p = d = None
    for row in reader:
        if not row:
            continue
        p, d = int(row[0]), int(row[1])
        rank, cardinality, aut_order, wt = (int(v) for v in row[2:6])
        mono = parse_monomial(row[6])
        canonical = monomial_to_matrix(mono, p, d)
        entries.append(
            CensusEntry(
                ClassId(p, rank, cardinality),
                canonical,
                aut_order,
                wt,
                math.factorial(p) // aut_order,
                mono,
            )
        )
    if p is None:
        raise ValueError("census CSV has no data rows")
    return CensusReport(p, d, tuple(entries), sum(e.cardinality for e in entries))


def render_census_jsonl(report: CensusReport, catalog_ranks: dict[int, int]) -> str:
    lines = []
    for entry in report.entries:
        record = {
            "p": report.p,
            "d": report.d,
            "rank": entry.rank,
            "cardinality": entry.cardinality,
            "aut_order": entry.aut_order,
            "weight": entry.weight,
            "monomial": _monomial_text(entry.representative),
            "matrix": [list(row) for row in entry.canonical.entries],
            "paper_rank": catalog_ranks.get(entry.rank),
        }
        lines.append(json.dumps(record, separators=(",", ":")))
    return "\n".join(lines) + "\n"


def parse_census_jsonl(text: str) -> CensusReport:
    """Rebuild a CensusReport from render_census_jsonl output (lossless)."""
    entries = []
    p = d = None
    for line in text.splitlines():
        if not line.strip():
            continue
        record = json.loads(line)
        p, d = record["p"], record["d"]
        canonical = ArcMatrix(tuple(tuple(row) for row in record["matrix"]))
        entries.append(
            CensusEntry(
                ClassId(p, record["rank"], record["cardinality"]),
                canonical,
                record["aut_order"],
                record["weight"],
                math.factorial(p) // record["aut_order"],
                parse_monomial(record["monomial"]),
            )
        )
    if p is None:
        raise ValueError("census JSONL has no records")
    return CensusReport(p, d, tuple(entries), sum(e.cardinality for e in entries))


def render_census_text(report: CensusReport, catalog_ranks: dict[int, int]) -> str:
    out = [
        "nodes  d  classes  total_configurations",
        f"{report.p:5d}  {report.d}  {len(report.entries):7d}  {report.total:20d}",
        "",
        "rank  cardinality  aut_order  weight  paper  monomial",
    ]
    for entry in report.entries:
        paper = catalog_ranks.get(entry.rank)
        out.append(
            f"{entry.rank:4d}  {entry.cardinality:11d}  {entry.aut_order:9d}  "
            f"{entry.weight:6d}  {paper if paper is not None else '-':>5}  "
            f"{_monomial_text(entry.representative)}"
        )
    return "\n".join(out) + "\n"


def _render_report(report: CensusReport, fmt: str) -> str:
    if fmt == "csv":
        return render_census_csv(report)
    if fmt == "jsonl":
        return render_census_jsonl(report, _catalog_rank_map(report))
    return render_census_text(report, _catalog_rank_map(report))


def _cmd_census(args) -> int:
    sys.stdout.write(_render_report(build_census(args.p, args.d), args.format))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    sys.stdout.write(_render_report(oracle_census(args.p, args.d), args.format))
    return EXIT_OK


def _verify_one(p: int, catalog: Catalog, out) -> tuple[bool, int, int, int]:
    """Verify one node count; returns (ok, records, matched, corrected)."""
    report = build_census(p, 2)
    oracle = oracle_census(p, 2)
    diff = compare_census(report, oracle)
    verification = verify_against_catalog(report, catalog)
    records = catalog.for_p(p)

    ok = True
    print(f"== p={p}, d=2 ==", file=out)
    print(
        f"computed: {len(report.entries)} classes, total {report.total}",
        file=out,
    )
    if diff.is_empty():
        print(f"oracle cross-check: OK ({oracle.total} words)", file=out)
    else:
        ok = False
        print("oracle cross-check: FAIL", file=out)
        for canon in diff.only_in_a:
            print(f"  only in analytic census: {canon}", file=out)
        for canon in diff.only_in_b:
            print(f"  only in oracle census: {canon}", file=out)
        for canon, card_a, card_b in diff.cardinality_mismatches:
            print(f"  {canon}: analytic {card_a} vs oracle {card_b}", file=out)
    if not records:
        print(f"catalog: no records for p={p} (skipped)", file=out)
        return ok, 0, 0, 0
    print(
        f"catalog: {len(records)} records; matched {len(verification.matched)}, "
        f"corrected {len(verification.corrected)}, "
        f"mismatched {len(verification.mismatched)}, "
        f"unmatched {len(verification.unmatched_catalog)}",
        file=out,
    )
    for item in verification.corrected:
        i, j = item.inserted_arc
        print(
            f"  corrected {item.record.designation}: monomial "
            f"'{item.record.monomial}' completed with x[{i},{j}]; "
            f"cardinality {item.entry.cardinality} confirmed",
            file=out,
        )
        if item.record.note:
            print(f"    note: {item.record.note}", file=out)
    for item in verification.mismatched:
        ok = False
        print(f"  mismatched {item.record.designation}: {item.reason}", file=out)
    for item in verification.unmatched_catalog:
        ok = False
        print(f"  unmatched record {item.record.designation}: {item.reason}", file=out)
    for entry in verification.unmatched_computed:
        ok = False
        print(
            f"  computed class {p},{entry.rank} (cardinality {entry.cardinality}) "
            "has no catalog record",
            file=out,
        )
    return ok, len(records), len(verification.matched), len(verification.corrected)


def _cmd_verify(args) -> int:
    catalog = load_catalog(args.paper_data)
    node_counts = [args.p] if args.p is not None else list(catalog.node_counts())
    all_ok = True
    records = matched = corrected = 0
    for p in node_counts:
        ok, n_rec, n_match, n_corr = _verify_one(p, catalog, sys.stdout)
        all_ok = all_ok and ok
        records += n_rec
        matched += n_match
        corrected += n_corr
        print(file=sys.stdout)
    print(
        f"summary: {records} catalog records; {matched} matched directly, "
        f"{corrected} corrected",
        file=sys.stdout,
    )
    print(f"verification: {'PASS' if all_ok else 'FAIL'}", file=sys.stdout)
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def _cmd_lookup(args) -> int:
    mono = parse_monomial(args.monomial)
    report = build_census(args.p, args.d)
    class_id = class_lookup(report, mono)
    print(f"class {class_id.p},{class_id.rank} cardinality {class_id.cardinality}")
    return EXIT_OK


def _cmd_render(args) -> int:
    try:
        p_text, rank_text = args.class_id.split(",")
        p, rank = int(p_text), int(rank_text)
    except ValueError:
        raise ValueError(f"--class expects '<p>,<rank>', got {args.class_id!r}") from None
    report = build_census(p, args.d)
    if not 1 <= rank <= len(report.entries):
        raise ValueError(
            f"rank {rank} out of range; census for p={p}, d={args.d} has "
            f"{len(report.entries)} classes"
        )
    sys.stdout.write(emit_dot(report.entries[rank - 1].canonical))
    return EXIT_OK


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmcensus",
        description="Exact census of isomorphism classes of d-in/d-out regular "
        "directed multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    census = sub.add_parser("census", help="emit the analytic census")
    oracle = sub.add_parser("oracle", help="emit the brute-force word-oracle census")
    for p_cmd in (census, oracle):
        p_cmd.add_argument("-p", type=_nonnegative_int, required=True, help="node count")
        p_cmd.add_argument("-d", type=_positive_int, default=2, help="degree (default 2)")
        p_cmd.add_argument(
            "--format", choices=["jsonl", "csv", "text"], default="text"
        )
    census.set_defaults(func=_cmd_census)
    oracle.set_defaults(func=_cmd_oracle)

    verify = sub.add_parser(
        "verify", help="cross-check both censuses and verify against the catalog"
    )
    group = verify.add_mutually_exclusive_group()
    group.add_argument("-p", type=_nonnegative_int, default=None, help="verify one node count")
    group.add_argument(
        "--all", action="store_true", help="verify every cataloged node count (default)"
    )
    verify.add_argument(
        "--paper-data", metavar="PATH", default=None,
        help="alternate catalog CSV (default: bundled catalog)",
    )
    verify.set_defaults(func=_cmd_verify)

    lookup = sub.add_parser("lookup", help="locate the class of a monomial")
    lookup.add_argument("--monomial", required=True, help="monomial text")
    lookup.add_argument("-p", type=_nonnegative_int, required=True, help="node count")
    lookup.add_argument("-d", type=_positive_int, default=2, help="degree (default 2)")
    lookup.set_defaults(func=_cmd_lookup)

    render = sub.add_parser("render", help="emit a class representative as DOT")
    render.add_argument(
        "--class", dest="class_id", required=True, metavar="P,RANK",
        help="class designation, e.g. 5,85",
    )
    render.add_argument("-d", type=_positive_int, default=2, help="degree (default 2)")
    render.add_argument("--format", choices=["dot"], default="dot")
    render.set_defaults(func=_cmd_render)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    return run_cli(argv)
