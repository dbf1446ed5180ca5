"""Command-line front end: ``derecon <command> ...``.

Exit status: 0 on success (and agreement for ``verify``), 1 when
``verify`` finds discrepancies, 2 on usage, domain or capacity errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, graph6
from .cache import Cache, CacheEntry, default_cache_path
from .canon import canonical_form
from .deck import dedeck
from .families import DoubleBroomParams, double_broom, parse_family
from .graph import CapacityError, DomainError, Graph, set_vertex_cap
from .recon import ReconReport, recon_report
from .reconstruct import confusers, extensions, lemma1_table
from .theorems import CSV_COLUMNS, InstanceResult, discrepancy, evaluate, instances, validate_certificate

log = logging.getLogger("derecon")


def read_graph(spec: str) -> Graph:
    """Family spec, ``g6=...``, bare graph6, or ``-`` for graph6 on stdin."""
    if spec == "-":
        return graph6.decode(sys.stdin.readline())
    try:
        return parse_family(spec)
    except DomainError as family_error:
        try:
            return graph6.decode(spec)
        except (DomainError, IndexError, UnicodeError):
            raise family_error from None


def _report(g: Graph, cache: Cache | None) -> ReconReport:
    key = canonical_form(g)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None and hit.report is not None:
            return ReconReport.from_dict(hit.report)
    report = recon_report(g)
    if cache is not None:
        cache.put(CacheEntry(key, dedeck(g).serialize(), report.to_dict(), cache.tool_version))
    return report


def cmd_deck(args) -> int:
    sys.stdout.write(dedeck(read_graph(args.spec)).serialize())
    return 0


def cmd_recon(args) -> int:
    cache = Cache(args.cache) if args.cache else None
    print(_report(read_graph(args.spec), cache).to_json())
    return 0


def cmd_confusers(args) -> int:
    cs = confusers(read_graph(args.spec))
    for c in sorted(cs, key=lambda c: (-c.overlap, c.key)):
        if c.overlap >= args.min_overlap:
            print(f"{c.key} {c.overlap}")
    return 0


def cmd_lemma1(args) -> int:
    print("u v degree literal up_to_symmetry")
    for (u, v), d, literal, sym in lemma1_table(read_graph(args.spec)):
        print(f"{u} {v} {d} {int(literal)} {int(sym)}")
    return 0


def cmd_extensions(args) -> int:
    for key in extensions(read_graph(args.graph), args.degree):
        print(key)
    return 0


def _evaluate(params: DoubleBroomParams, cache_path: str | None, up_to_symmetry: bool) -> InstanceResult:
    cache = Cache(cache_path) if cache_path else None
    return evaluate(params, up_to_symmetry, _report(double_broom(params), cache))


def _evaluate_star(job):
    return _evaluate(*job)


def render_results(results: list[InstanceResult], fmt: str) -> str:
    if fmt == "json":
        rows = [dict(zip(CSV_COLUMNS, r.csv_row())) for r in results]
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in results:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def run_verify(
    max_vertices: int, jobs: int = 1, cache_path: str | None = None, up_to_symmetry: bool = True
) -> list[InstanceResult]:
    todo = [(q, cache_path, up_to_symmetry) for q in instances(max_vertices)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate_star, todo, chunksize=1))
    return [_evaluate(*job) for job in todo]


def cmd_verify(args) -> int:
    results = run_verify(args.max_vertices, args.jobs, args.cache, not args.literal_lemma1)
    sys.stdout.write(render_results(results, args.format))
    bad = [discrepancy(r) for r in results if not r.agrees]
    if not bad:
        return 0
    outdir = Path(args.certificates)
    outdir.mkdir(parents=True, exist_ok=True)
    for d in bad:
        q = d.params
        payload = d.to_dict()
        payload["validated"] = validate_certificate(d)
        (outdir / f"D_{q.m}_{q.n}_{q.p}.json").write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    print(f"{len(bad)} discrepancies; certificates in {outdir}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="derecon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--vertex-cap", type=int, default=None, help="maximum graph order (default 16)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deck", help="print the serialized dedeck")
    p.add_argument("spec")
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("recon", help="print dern/adern report as JSON")
    p.add_argument("spec")
    p.add_argument("--cache", default=default_cache_path())
    p.set_defaults(func=cmd_recon)

    p = sub.add_parser("confusers", help="list confusers with their overlaps")
    p.add_argument("spec")
    p.add_argument("--min-overlap", type=int, default=1)
    p.set_defaults(func=cmd_confusers)

    p = sub.add_parser("lemma1", help="per-edge one-decard sufficiency table")
    p.add_argument("spec")
    p.set_defaults(func=cmd_lemma1)

    p = sub.add_parser("verify", help="compare closed forms against brute force")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", default=default_cache_path())
    p.add_argument("--certificates", default="certificates", help="directory for discrepancy certificates")
    p.add_argument(
        "--literal-lemma1",
        action="store_true",
        help="read the one-decard condition on labeled pairs instead of up to automorphisms of the card",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extensions", help="one-edge extensions of a card with given edge degree")
    p.add_argument("graph")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_extensions)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.vertex_cap is not None:
        set_vertex_cap(args.vertex_cap)
    if args.command == "verify" and args.max_vertices > 16 and args.vertex_cap is None:
        print(f"error: --max-vertices {args.max_vertices} exceeds the vertex cap", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
