"""Command-line entry point: construct, exact, verify, batch, gen.

Exit codes
  construct  0 certificate within bound without repair, 2 input rejected,
             3 repair needed / bound violated / construction step failed
  exact      0 ok, 2 input rejected, 4 graph larger than the exact cap
  verify     0 local resolving, 1 failing edge found, 2 bad input
  batch      0 every processed graph clean, 2 unreadable file, 3 any violation
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
from typing import Optional

from .constructor import ConstructionError, DivisionFactError, construct_certificate
from .generators import NAMED_GRAPH_HELP, labeled_graphs, named_graph, random_k4_free
from .graph import Graph, Graph6Error, clique_number, has_k4, is_connected, parse_graph6, write_graph6
from .oracle import DEFAULT_EXACT_CAP, DisconnectedGraphError, OracleCapError, check_known_bounds, is_local_resolving, local_metric_dimension
from .packing import DEFAULT_NODE_CAP, InputContractError, PackingBudgetError

ENV_PREFIX = "LOCDIM_"


def _env(name: str, default, cast=int):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    if cast is bool:
        return raw.lower() in ("1", "true", "yes", "on")
    return cast(raw)


class InputError(Exception):
    pass


def _load_graph(args) -> Graph:
    given = [x for x in (args.name, args.g6, args.file) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --name, --g6, --file")
    try:
        if args.name is not None:
            return named_graph(args.name)
        if args.g6 is not None:
            return parse_graph6(args.g6)
        with open(args.file) as fh:
            for line in fh:
                if line.strip():
                    return parse_graph6(line)
        raise InputError(f"{args.file} holds no graph")
    except (KeyError, ValueError, OSError) as exc:
        raise InputError(str(exc).strip("'\"")) from exc


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


# -- construct / exact / verify -------------------------------------------------


def cmd_construct(args) -> int:
    try:
        g = _load_graph(args)
        cert = construct_certificate(g, strict=args.strict, node_cap=args.node_cap)
    except InputError as exc:
        return _fail(str(exc), 2)
    except InputContractError as exc:
        return _fail(str(exc), 2)
    except (ConstructionError, DivisionFactError, PackingBudgetError) as exc:
        return _fail(f"{type(exc).__name__}: {exc}", 3)
    if args.trace:
        print(cert.division.to_jsonl(), file=sys.stderr)
    print(cert.dumps())
    return 0 if cert.clean else 3


def cmd_exact(args) -> int:
    try:
        g = _load_graph(args)
        k, witness = local_metric_dimension(g, cap=args.exact_cap)
    except InputError as exc:
        return _fail(str(exc), 2)
    except DisconnectedGraphError as exc:
        return _fail(str(exc), 2)
    except OracleCapError as exc:
        return _fail(str(exc), 4)
    print(json.dumps({"n": g.n, "dim_l": k, "witness": list(witness)}, sort_keys=True))
    return 0


def _parse_vertex_list(text: str, n: int) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            v = int(tok)
        except ValueError:
            raise InputError(f"not a vertex: {tok!r}") from None
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range for n={n}")
        out.append(v)
    return out


def cmd_verify(args) -> int:
    try:
        g = _load_graph(args)
        W = _parse_vertex_list(args.set, g.n)
        verdict = is_local_resolving(g, W)
    except InputError as exc:
        return _fail(str(exc), 2)
    except DisconnectedGraphError as exc:
        return _fail(str(exc), 2)
    if verdict.ok:
        print("ok")
        return 0
    u, v = verdict.failing_edge
    print(f"failing edge {u},{v}")
    return 1


# -- batch ----------------------------------------------------------------------


def _batch_record(item) -> dict:
    lineno, text, exact_cap, strict, node_cap = item
    rec: dict = {"line": lineno, "graph6": text}
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        rec["error"] = f"parse: {exc}"
        return rec
    rec["n"] = g.n
    rec["omega"] = clique_number(g) if g.n else 0
    if g.n < 4:
        rec["skipped"] = f"n = {g.n} < 4"
    elif not is_connected(g):
        rec["skipped"] = "graph is disconnected"
        return rec
    elif has_k4(g):
        rec["skipped"] = "contains K4"
    else:
        try:
            cert = construct_certificate(g, strict=strict, node_cap=node_cap)
            rec["certificate"] = {
                "W": list(cert.W),
                "size": cert.size,
                "bound": cert.bound,
                "bound_ok": cert.bound_ok,
                "repair_performed": cert.repair_performed,
                "steps": sorted({s.step for s in cert.trace}, key=lambda s: tuple(map(int, s.split(".")))),
            }
        except (ConstructionError, DivisionFactError, PackingBudgetError) as exc:
            rec["construction_error"] = f"{type(exc).__name__}: {exc}"
    if g.n <= exact_cap and is_connected(g):
        report = check_known_bounds(g, cap=exact_cap)
        rec["dim_l"] = report.dim_l
        rec["bounds"] = {c.name: c.holds for c in report.checks}
    else:
        rec["dim_l"] = None
    return rec


def _summarize(records: list[dict]) -> dict:
    s = {
        "graphs": len(records),
        "parse_errors": 0,
        "skipped": 0,
        "certified": 0,
        "bound_ok": 0,
        "repairs": 0,
        "construction_errors": 0,
        "exact_computed": 0,
        "tight_dim_l": 0,
        "tight_certificate": 0,
        "bound_failures": 0,
        "violations": [],
    }
    for r in records:
        if "error" in r:
            s["parse_errors"] += 1
            continue
        if "skipped" in r:
            s["skipped"] += 1
        cert = r.get("certificate")
        if cert:
            s["certified"] += 1
            s["bound_ok"] += cert["bound_ok"]
            s["repairs"] += cert["repair_performed"]
            s["tight_certificate"] += cert["size"] == cert["bound"]
            if not cert["bound_ok"] or cert["repair_performed"]:
                s["violations"].append(r["graph6"])
        if "construction_error" in r:
            s["construction_errors"] += 1
            s["violations"].append(r["graph6"])
        if r.get("dim_l") is not None:
            s["exact_computed"] += 1
            if r["n"] >= 4 and r["dim_l"] == r["n"] // 2 and "certificate" in r:
                s["tight_dim_l"] += 1
            if not all(r["bounds"].values()):
                s["bound_failures"] += 1
                if r["graph6"] not in s["violations"]:
                    s["violations"].append(r["graph6"])
    return s


def run_batch(lines, exact_cap: int, jobs: int, strict: bool = False, node_cap: int = DEFAULT_NODE_CAP):
    items = [
        (k, line.strip(), exact_cap, strict, node_cap)
        for k, line in enumerate(lines, start=1)
        if line.strip()
    ]
    if jobs > 1 and len(items) > 1:
        with multiprocessing.Pool(jobs) as pool:
            records = pool.map(_batch_record, items, chunksize=max(1, len(items) // (4 * jobs)))
    else:
        records = [_batch_record(it) for it in items]
    return records, _summarize(records)


def cmd_batch(args) -> int:
    path = args.file or args.path
    if path is None:
        return _fail("batch needs a graph6 file", 2)
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            lines = fh.readlines()
    except OSError as exc:
        return _fail(str(exc), 2)
    records, summary = run_batch(lines, args.exact_cap, args.jobs, args.strict, args.node_cap)
    body = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    print(json.dumps({"summary": summary}, sort_keys=True))
    return 3 if summary["violations"] else 0


# -- gen --------------------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        if args.name is not None:
            graphs = [named_graph(args.name)]
        elif args.random is not None:
            n = args.random
            graphs = [random_k4_free(n, args.p, args.seed + k) for k in range(args.count)]
        elif args.all is not None:
            graphs = labeled_graphs(args.all, forbid=4 if args.k4_free else None, connected=args.connected)
        else:
            return _fail("gen needs --name, --random or --all", 2)
        for g in graphs:
            print(write_graph6(g))
    except (KeyError, ValueError) as exc:
        return _fail(str(exc).strip("'\""), 2)
    return 0


# -- parser ------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("--name", help=f"named graph: {NAMED_GRAPH_HELP}")
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--file", help="file whose first non-empty line is a graph6 string")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locdim",
        description="Local resolving sets of size <= floor(n/2) for connected K4-free graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--exact-cap", type=int, default=_env("EXACT_CAP", DEFAULT_EXACT_CAP),
                        help="largest n for the exhaustive dim_l search (env LOCDIM_EXACT_CAP)")
    common.add_argument("--node-cap", type=int, default=_env("NODE_CAP", DEFAULT_NODE_CAP),
                        help="packing search node budget (env LOCDIM_NODE_CAP)")
    common.add_argument("--strict", action="store_true", default=_env("STRICT", False, bool),
                        help="literal reading of the 12th process (i, j both from Z1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build and verify a certificate")
    _add_input(p)
    p.add_argument("--trace", action="store_true", help="write the vertex division as JSON lines to stderr")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("exact", parents=[common], help="exact local metric dimension")
    _add_input(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", parents=[common], help="check a candidate local resolving set")
    _add_input(p)
    p.add_argument("--set", "-W", required=True, help="comma-separated vertex list")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", parents=[common], help="scan a graph6 stream")
    p.add_argument("path", nargs="?", help="graph6 file ('-' for stdin)")
    p.add_argument("--file", help="same as the positional path")
    p.add_argument("--jobs", type=int, default=_env("JOBS", 1))
    p.add_argument("--report", help="write per-graph JSON lines here instead of stdout")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("gen", help="emit graph6 lines")
    p.add_argument("--name", help=f"named graph: {NAMED_GRAPH_HELP}")
    p.add_argument("--random", type=int, metavar="N", help="random K4-free graphs on N vertices")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=_env("SEED", 0))
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--all", type=int, metavar="N", help="every labeled graph on N vertices")
    p.add_argument("--k4-free", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
