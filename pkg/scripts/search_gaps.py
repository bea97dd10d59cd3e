"""Targeted random search for graphs that drive the construction into rare steps.

Random graphs rarely contain triangles that survive the first three
processes, so this builds graphs from gadgets instead: diamonds and paws
each tied to a triangle, plus small fragments hung on the diamond hubs or
paw vertices.  It reports how often each step fires, the smallest graph
per step, and every graph that needed repair or broke the bound.

    python scripts/search_gaps.py --trials 20000
"""

from __future__ import annotations

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from locdim import construct_certificate, has_k4, is_connected, write_graph6
from locdim.graph import Graph, iter_bits

SHAPES = {
    "diamond": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    "paw": (4, [(0, 1), (1, 2), (0, 2), (1, 3)]),
    "triangle": (3, [(0, 1), (1, 2), (0, 2)]),
    "K1": (1, []),
    "K2": (2, [(0, 1)]),
    "P3": (3, [(0, 1), (1, 2)]),
    "star": (4, [(0, 1), (0, 2), (0, 3)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "2K2": (4, [(0, 1), (2, 3)]),
}
HANGERS = ["K1", "K2", "P3", "star", "P4", "C4", "2K2", "K1", "K1"]


@dataclass
class SearchConfig:
    trials: int = 5000
    seed: int = 0
    max_n: int = 26
    strict: bool = False


def gadget_graph(rng: random.Random) -> Graph:
    edges: list[tuple[int, int]] = []
    n = 0

    def add(kind: str) -> int:
        nonlocal n
        size, es = SHAPES[kind]
        base = n
        edges.extend((base + u, base + v) for u, v in es)
        n += size
        return base

    cores = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.choice(["diamond", "paw"])
        h = add(kind)
        t = add("triangle")
        if kind == "diamond":
            edges.append((h + rng.choice([1, 3]), t))
            if rng.random() < 0.3:
                edges.append((h + rng.choice([1, 3]), t + 1))
        else:
            edges.append((h + 1, t))
        cores.append((kind, h))

    for _ in range(rng.randint(0, 3)):
        if rng.random() < 0.3:
            d = add("diamond")
            for _ in range(rng.randint(2, 5)):
                edges.append((d + rng.randrange(4), add("triangle")))
            continue
        kind = rng.choice(HANGERS)
        b = add(kind)
        v = b + rng.randrange(SHAPES[kind][0])
        core, h = rng.choice(cores)
        if core == "diamond":
            edges += [(v, h + rng.choice([0, 2])), (v, h + rng.choice([1, 3]))]
        else:
            edges.append((v, h + rng.choice([1, 2, 3])))
            if rng.random() < 0.5:
                edges.append((v, h + rng.choice([1, 2])))

    for _ in range(rng.randint(0, 2)):
        (_, h1), (_, h2) = rng.choice(cores), rng.choice(cores)
        if h1 != h2:
            x = h2 + rng.choice([2, 3])
            edges += [(x, h1), (x, h1 + rng.choice([1, 2, 3]))]

    # drop edges that would close a K4 instead of rejecting the whole graph
    masks = [0] * n
    for u, v in edges:
        if u == v or (masks[u] >> v) & 1:
            continue
        common = masks[u] & masks[v]
        if any(masks[w] & common for w in iter_bits(common)):
            continue
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph.from_masks(masks)


def run(cfg: SearchConfig) -> dict:
    rng = random.Random(cfg.seed)
    steps: Counter = Counter()
    stats: Counter = Counter()
    smallest: dict[str, str] = {}
    failures = []
    start = time.perf_counter()
    for _ in range(cfg.trials):
        g = gadget_graph(rng)
        if g.n < 4 or g.n > cfg.max_n or not is_connected(g) or has_k4(g):
            stats["skipped"] += 1
            continue
        g6 = write_graph6(g)
        try:
            cert = construct_certificate(g, strict=cfg.strict)
        except Exception as exc:  # report, keep searching
            stats[type(exc).__name__] += 1
            failures.append({"graph6": g6, "error": str(exc)[:200]})
            continue
        stats["certified"] += 1
        for s in {t.step for t in cert.trace}:
            steps[s] += 1
            if s not in smallest or len(g6) < len(smallest[s]):
                smallest[s] = g6
        if not cert.clean:
            stats["not_clean"] += 1
            failures.append({"graph6": g6, "size": cert.size, "bound": cert.bound, "repaired": list(cert.repaired)})
    order = lambda kv: tuple(map(int, kv[0].split(".")))
    return {
        "stats": dict(stats),
        "steps": dict(sorted(steps.items(), key=order)),
        "smallest": dict(sorted(smallest.items(), key=order)),
        "failures": sorted(failures, key=lambda f: (len(f["graph6"]), f["graph6"]))[:25],
        "seconds": round(time.perf_counter() - start, 1),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=SearchConfig.trials)
    ap.add_argument("--seed", type=int, default=SearchConfig.seed)
    ap.add_argument("--max-n", type=int, default=SearchConfig.max_n)
    ap.add_argument("--strict", action="store_true")
    args = ap.parse_args()
    cfg = SearchConfig(args.trials, args.seed, args.max_n, args.strict)
    print(json.dumps({"config": asdict(cfg), **run(cfg)}, indent=1))


if __name__ == "__main__":
    main()
