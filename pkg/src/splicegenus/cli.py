"""Command-line front end: invariant tables, witnesses, and verification.

Exit status: 0 on success, 1 on a golden mismatch or failed check, 2 on an
input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .diagram import DiagramError, canonical_code, parse_pd
from .pipeline import GenusReport, PipelineError, theorem_check, two_component_genus
from .search import DEFAULT_MAX_CROSSINGS, SearchError, u_minus
from .surface import beta1_convention, clark_check
from . import verify as suites

__all__ = [
    "LinkRecord",
    "RowResult",
    "load_records",
    "run_batch",
    "format_table",
    "print_witness",
    "verify",
    "main",
]

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class LinkRecord:
    name: str
    pd: str
    expected: tuple[int, int, int, int] | None = None


@dataclass
class RowResult:
    record: LinkRecord
    report: GenusReport | None = None
    error: str | None = None

    @property
    def mismatch(self) -> bool:
        return (
            self.report is not None
            and self.record.expected is not None
            and self.report.row != self.record.expected
        )


def bundled_table() -> str:
    return resources.files("splicegenus").joinpath("data/rolfsen_2comp.jsonl").read_text()


def load_records(text: str) -> tuple[list[LinkRecord], list[str]]:
    """Parse JSONL records; return the good ones and diagnostics for the rest."""
    records, errors = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            exp = obj.get("expected")
            if exp is not None:
                if len(exp) != 4 or not all(isinstance(v, int) for v in exp):
                    raise ValueError("expected must be four integers")
                exp = tuple(exp)
            records.append(LinkRecord(str(obj["name"]), str(obj["pd"]), exp))
        except (ValueError, KeyError, TypeError) as exc:
            errors.append(f"line {lineno}: {exc}")
    return records, errors


def _evaluate(args: tuple[LinkRecord, int, bool]) -> RowResult:
    rec, cap, oracle = args
    try:
        d = parse_pd(rec.pd)
    except DiagramError as exc:
        return RowResult(rec, error=f"parse error: {exc}")
    try:
        return RowResult(rec, two_component_genus(d, max_crossings=cap, oracle=oracle))
    except (DiagramError, SearchError, PipelineError) as exc:
        return RowResult(rec, error=str(exc))


def run_batch(
    records: Sequence[LinkRecord],
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    oracle: bool = False,
    jobs: int = 1,
) -> list[RowResult]:
    """Evaluate every record; results keep the input order."""
    work = [(r, max_crossings, oracle) for r in records]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate, work))
    return [_evaluate(w) for w in work]


def _cells(row: RowResult, beta1: bool, extended: bool) -> list[str]:
    rep = row.report
    assert rep is not None
    cells = [row.record.name, *map(str, rep.row)]
    if beta1:
        cells.append(str(beta1_convention(rep.C, 2)))
    if extended:
        cells += [
            str(rep.m),
            str(rep.bracket_m),
            str(rep.g),
            str(rep.min_genus),
            str(rep.n_crossings),
            rep.route,
        ]
    return cells


def format_table(
    rows: Iterable[RowResult], fmt: str = "text", beta1: bool = False, extended: bool = False
) -> str:
    """Render rows as aligned text, CSV, or Markdown; failed rows are skipped."""
    head = ["L", "u-", "u2-", "C", "chi"]
    if beta1:
        head.append("beta1")
    if extended:
        head += ["m", "[m]", "g", "min", "n", "route"]
    body = [_cells(r, beta1, extended) for r in rows if r.report is not None]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows(body)
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        lines += ["| " + " | ".join(r) + " |" for r in body]
        return "\n".join(lines) + "\n"
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip() for r in [head, *body]]
    return "\n".join(lines) + "\n"


def print_witness(records: Sequence[LinkRecord], name: str, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> str:
    """Format an optimal splice sequence for the named record.

    Raises:
        KeyError: If no record has that name.
    """
    rec = next((r for r in records if r.name == name), None)
    if rec is None:
        raise KeyError(name)
    d = parse_pd(rec.pd)
    value, wit = u_minus(d, max_crossings=max_crossings)
    lines = [f"{name}: u- = {value}, {len(wit.moves)} moves"]
    lines.append(f"  0  {'start':<12}  {canonical_code(wit.diagrams[0])}")
    for k, (mv, diag) in enumerate(zip(wit.moves, wit.diagrams[1:]), start=1):
        step = f"{mv.kind} @{mv.crossing}{mv.way}"
        lines.append(f"  {k}  {step:<12}  {canonical_code(diag)}")
    return "\n".join(lines) + "\n"


def verify(
    seed: int = 0,
    count: int = 100,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    out=sys.stdout,
) -> bool:
    """Run every suite and print one summary line each."""
    records, _ = load_records(bundled_table())
    results = run_batch(records, max_crossings=max_crossings, oracle=True)
    table = suites.SuiteResult("table")
    for r in results:
        ok = (
            r.report is not None
            and not r.mismatch
            and theorem_check(r.report)
            and clark_check(r.report.C, r.report.g)
            and all(r.report.checks.values())
        )
        table.record(ok, r.record.name)
    table_diagrams = [parse_pd(r.pd) for r in records]
    small = list(suites.random_corpus(seed, count, 7))
    two = list(suites.random_corpus(seed + 1, count, 9, components=(2,)))
    results = [
        table,
        suites.suite_oracle_u(table_diagrams + small),
        suites.suite_oracle_chi(
            table_diagrams + list(suites.random_corpus(seed + 2, count, 10))
        ),
        suites.suite_theorem(table_diagrams + two),
        suites.suite_twist_chi(two[: max(50, count // 2)]),
        suites.suite_connected_sum(seed + 3, max(1, count // 5)),
        suites.suite_parse_failure(lambda s: s.replace("]", ",9]", 1), records[0].pd),
    ]
    for res in results:
        print(res.summary(), file=out)
        for f in res.failures[:5]:
            print(f"    {f}", file=out)
    return all(r.ok for r in results)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="splicegenus", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    run = sub.add_parser("run", help="compute the invariant table for a JSONL file")
    run.add_argument("input", nargs="?", help="JSONL file (default: bundled table)")
    run.add_argument("--format", choices=("text", "csv", "md"), default="text")
    run.add_argument("--oracle", action="store_true", help="add brute-force cross-checks")
    run.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    run.add_argument("--beta1", action="store_true", help="add the first-Betti convention column")
    run.add_argument("--extended", action="store_true", help="add m, [m], g, min, n, route")
    run.add_argument("--witness", metavar="NAME", help="also print a witness for NAME")
    run.add_argument("--jobs", type=int, default=1)

    wit = sub.add_parser("witness", help="print an optimal splice sequence")
    wit.add_argument("name")
    wit.add_argument("input", nargs="?")
    wit.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)

    ver = sub.add_parser("verify", help="run the cross-check suites")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--count", type=int, default=100)
    ver.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    return p


def _read(path: str | None) -> str:
    return bundled_table() if path is None else Path(path).read_text()


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.cmd == "verify":
        ok = verify(args.seed, args.count, args.max_crossings)
        return EXIT_OK if ok else EXIT_FAIL
    try:
        text = _read(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    records, errors = load_records(text)
    for e in errors:
        print(f"error: {e}", file=sys.stderr)
    if args.cmd == "witness":
        try:
            sys.stdout.write(print_witness(records, args.name, args.max_crossings))
        except KeyError:
            print(f"error: unknown link {args.name!r}", file=sys.stderr)
            return EXIT_INPUT
        except (DiagramError, SearchError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        return EXIT_INPUT if errors else EXIT_OK

    rows = run_batch(records, args.max_crossings, args.oracle, args.jobs)
    sys.stdout.write(format_table(rows, args.format, args.beta1, args.extended))
    status = EXIT_INPUT if errors else EXIT_OK
    for r in rows:
        if r.error is not None:
            print(f"error: {r.record.name}: {r.error}", file=sys.stderr)
            status = EXIT_INPUT if r.error.startswith("parse error") else max(status, EXIT_FAIL)
        elif r.mismatch:
            print(
                f"mismatch: {r.record.name}: expected {r.record.expected}, got {r.report.row}",  # type: ignore[union-attr]
                file=sys.stderr,
            )
            status = max(status, EXIT_FAIL)
    if args.witness:
        try:
            sys.stdout.write(print_witness(records, args.witness, args.max_crossings))
        except KeyError:
            print(f"error: unknown link {args.witness!r}", file=sys.stderr)
            return EXIT_INPUT
    return status


if __name__ == "__main__":
    raise SystemExit(main())
