"""Command-line front end.

Exit codes: 0 success (including "hypothesis failed" answers), 2 theorem
counterexample, 3 input error, 4 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from collections.abc import Iterator
from multiprocessing import Pool

from . import generators, oracle
from .cyclefinder import TheoremCounterexample, find_long_cycle
from .graph import Graph, Graph6Error, is_two_connected, parse_graph6, read_graph6_lines, write_graph6
from .hypothesis import THEOREMS, check, check_thm4
from .longpath import SizeCapExceeded, size_cap
from .motif import enumerate_claws, enumerate_modified_claws

log = logging.getLogger("cyclesmith")

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 2
EXIT_INPUT = 3
EXIT_CAP = 4

CSV_COLUMNS = (
    "graph6", "theorem", "c", "holds", "violation_kind",
    "u", "v", "degree_u", "degree_v", "common_neighbors",
)
CORPUS_FAMILIES = ("all", "biconnected", "claw_free", "claw_free_biconnected")


class InputError(Exception):
    pass


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _graphs(path: str | None) -> Iterator[tuple[int, Graph]]:
    if path is None or path == "-":
        yield from read_graph6_lines(sys.stdin)
        return
    try:
        fh = open(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    with fh:
        yield from read_graph6_lines(fh)


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


# commands


def cmd_check(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n") if args.csv else None
    if writer:
        writer.writerow(CSV_COLUMNS)
    if args.theorem != "shi" and args.c is None:
        raise InputError(f"--theorem {args.theorem} needs --c")
    for _, g in _graphs(args.input):
        report = check(g, args.theorem, args.c)
        g6 = write_graph6(g)
        if writer is None:
            _emit({"graph6": g6, **report.to_json()})
            continue
        v = report.violation
        u_, v_ = (v.vertices[0], v.vertices[1]) if v and v.kind != "claw" else ("", "")
        writer.writerow([
            g6, report.theorem, "" if report.c is None else report.c, str(report.holds).lower(),
            v.kind if v else "", u_, v_,
            v.degrees[0] if v and v.degrees else "", v.degrees[1] if v and v.degrees else "",
            v.common_neighbor_count if v and v.common_neighbor_count is not None else "",
        ])
    return EXIT_OK


def cmd_find(args) -> int:
    for _, g in _graphs(args.input):
        res = find_long_cycle(g, args.c, args.max_n)
        _emit({"graph6": write_graph6(g), **res.to_json(trace=args.trace)})
        if res.kind == "size_cap_exceeded":
            log.error("graph %s exceeds the size cap %d", write_graph6(g), size_cap(args.max_n))
            return EXIT_CAP
    return EXIT_OK


def verify_graph(task: tuple[str, tuple[int, int] | None, int | None]) -> dict:
    """Check one graph for every c in range; returns counts and failures."""
    g6, c_range, max_n = task
    g = parse_graph6(g6)
    out = {"twoConnected": 0, "hypothesisPasses": 0, "verified": 0, "failures": []}
    if not is_two_connected(g):
        return out
    out["twoConnected"] = 1
    lo, hi = c_range if c_range else (3, g.n + 2)
    truth = None
    for c in range(max(lo, 3), hi + 1):
        if not check_thm4(g, c).holds:
            continue
        out["hypothesisPasses"] += 1
        if truth is None:
            circ = oracle.circumference(g)
            truth = (oracle.is_hamiltonian(g)[0], circ[0] if circ else 0)
        hamiltonian, circumference = truth
        reason = None
        try:
            res = find_long_cycle(g, c, max_n)
        except TheoremCounterexample as exc:
            reason = f"finder: {exc}"
        else:
            if res.kind == "size_cap_exceeded":
                raise SizeCapExceeded(f"n={g.n} exceeds the size cap")
            if res.cycle is None or not res.cycle.is_valid(g):
                reason = f"finder returned {res.kind} without a valid cycle"
            elif res.kind == "hamilton" and (res.length != g.n or not hamiltonian):
                reason = "Hamilton claim disagrees with oracle"
            elif res.kind == "long_cycle" and res.length < c:
                reason = f"cycle length {res.length} < c"
            elif res.length > circumference:
                reason = f"cycle length {res.length} exceeds oracle circumference {circumference}"
        if reason is None and not (hamiltonian or circumference >= c):
            reason = f"oracle: not Hamiltonian and circumference {circumference} < c"
        if reason is None:
            out["verified"] += 1
        else:
            out["failures"].append({"graph6": g6, "c": c, "reason": reason})
    return out


def run_verify(records: list[str], c_range, jobs: int, max_n: int | None) -> tuple[dict, list[dict]]:
    tasks = [(g6, c_range, max_n) for g6 in records]
    if jobs > 1:
        with Pool(jobs) as pool:
            results = list(pool.imap(verify_graph, tasks, chunksize=64))
    else:
        results = [verify_graph(t) for t in tasks]
    summary = {"graphs": len(records), "twoConnected": 0, "hypothesisPasses": 0, "verified": 0}
    failures: list[dict] = []
    for r in results:
        for key in ("twoConnected", "hypothesisPasses", "verified"):
            summary[key] += r[key]
        failures.extend(r["failures"])
    summary["counterexamples"] = len(failures)
    return summary, failures


def cmd_verify(args) -> int:
    records = []
    cap = min(size_cap(args.max_n), oracle.ORACLE_CAP)
    for lineno, g in _graphs(args.corpus):
        if g.n > cap:
            log.error("line %d: n=%d exceeds the verification cap %d", lineno, g.n, cap)
            return EXIT_CAP
        records.append(write_graph6(g))
    summary, failures = run_verify(records, args.c_range, args.jobs, args.max_n)
    _emit(summary)
    if failures:
        with open(args.failures, "w") as fh:
            for f in failures:
                fh.write(json.dumps(f) + "\n")
        log.error("%d counterexample(s) written to %s", len(failures), args.failures)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family in CORPUS_FAMILIES:
        if args.n is None:
            raise InputError(f"--family {args.family} needs --n A..B")
        lo, hi = args.n
        build = {
            "all": generators.all_graphs,
            "biconnected": generators.biconnected_graphs,
            "claw_free": generators.claw_free_graphs,
            "claw_free_biconnected": generators.claw_free_biconnected_graphs,
        }[args.family]
        graphs = [g for n in range(lo, hi + 1) for g in build(n)]
        manifest = {"family": args.family, "params": {"n": [lo, hi]}, "seed": None}
    elif args.family == "random":
        if args.n is None:
            raise InputError("--family random needs --n")
        lo, hi = args.n
        seeds = range(args.seed, args.seed + args.count)
        graphs = [generators.random_two_connected(lo, args.extra, s) for s in seeds]
        manifest = {
            "family": "random_two_connected",
            "params": {"n": lo, "extraEdges": args.extra, "count": args.count},
            "seed": args.seed,
            "rng": generators.RNG_ALGORITHM,
        }
    else:
        params = {}
        if args.n is not None:
            params["n"] = args.n[0]
        for key in ("a", "b", "k"):
            if getattr(args, key) is not None:
                params[key] = getattr(args, key)
        graphs = [generators.named(args.family, **params)]
        manifest = {"family": args.family, "params": params, "seed": None}
    if args.line_graph:
        graphs = [generators.line_graph(g) for g in graphs]
        manifest["lineGraph"] = True
    if args.out:
        generators.write_corpus(graphs, args.out, manifest)
    else:
        for g in graphs:
            sys.stdout.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    wanted = [k for k in ("circumference", "hamiltonian", "longest_path") if getattr(args, k)]
    wanted = wanted or ["circumference", "hamiltonian", "longest_path"]
    for _, g in _graphs(args.input):
        out: dict = {"graph6": write_graph6(g)}
        if "circumference" in wanted:
            circ = oracle.circumference(g)
            out["circumference"] = circ[0] if circ else None
            out["cycle"] = list(circ[1].vertices) if circ else None
        if "hamiltonian" in wanted:
            ham, cyc = oracle.is_hamiltonian(g)
            out["hamiltonian"] = ham
            out["hamiltonCycle"] = list(cyc.vertices) if cyc else None
        if "longest_path" in wanted:
            out["longestPath"] = list(oracle.brute_longest_path(g).vertices) if g.n else []
        _emit(out)
    return EXIT_OK


def cmd_motifs(args) -> int:
    for _, g in _graphs(args.input):
        claws = enumerate_claws(g)
        mods = enumerate_modified_claws(g)
        _emit({
            "graph6": write_graph6(g),
            "clawCount": len(claws),
            "modifiedClawCount": len(mods),
            "claws": [w.to_json() for w in claws],
            "modifiedClaws": [w.to_json() for w in mods],
        })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=None, help="exact-search size cap (env CYCLESMITH_MAX_N)")
    common.add_argument("-v", "--verbose", action="store_true")
    parser = argparse.ArgumentParser(prog="cyclesmith", description="Long-cycle theorem checkers and verifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check a theorem hypothesis on each input graph")
    p.add_argument("input", nargs="?", help="graph6 file (default stdin)")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--csv", action="store_true", help="CSV instead of JSON lines")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find", parents=[common], help="find a Hamilton cycle or a cycle of length >= c")
    p.add_argument("input", nargs="?")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="embed rotation traces")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("verify", parents=[common], help="exhaustively verify the theorem over a corpus")
    p.add_argument("corpus", nargs="?")
    p.add_argument("--c-range", type=_int_range, default=None, help="A..B (default 3..n+2 per graph)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--failures", default="cyclesmith-failures.jsonl")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="generate graphs as graph6")
    p.add_argument("--family", required=True,
                   choices=generators.FAMILIES + CORPUS_FAMILIES + ("random",))
    p.add_argument("--n", type=_int_range, help="vertex count, or A..B for corpus families")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--extra", type=int, default=0, help="chords for --family random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--line-graph", action="store_true")
    p.add_argument("--out", help="write graph6 here plus a .json manifest")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", parents=[common], help="brute-force ground truth")
    p.add_argument("input", nargs="?")
    p.add_argument("--circumference", action="store_true")
    p.add_argument("--hamiltonian", action="store_true")
    p.add_argument("--longest-path", dest="longest_path", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("motifs", parents=[common], help="list induced claws and modified claws")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_motifs)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="cyclesmith: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "verify" and args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except (Graph6Error, InputError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except (SizeCapExceeded, oracle.OracleCapExceeded) as exc:
        log.error("%s", exc)
        return EXIT_CAP
    except TheoremCounterexample as exc:
        log.error("theorem counterexample: %s", exc)
        return EXIT_COUNTEREXAMPLE


if __name__ == "__main__":
    sys.exit(main())
