"""Test-graph supply: the tight friendship family, named graphs, random and exhaustive corpora."""

from __future__ import annotations

import random
import re
from itertools import combinations
from typing import Iterator, Optional

from .fragments import CATALOG
from .graph import Graph, is_connected, iter_bits


def friendship_graph(k: int) -> Graph:
    """k triangles sharing hub 0; the other edges are {2i-1, 2i}."""
    if k < 1:
        raise ValueError("friendship graph needs k >= 1")
    edges = [(0, v) for v in range(1, 2 * k + 1)]
    edges += [(2 * i - 1, 2 * i) for i in range(1, k + 1)]
    return Graph.from_edges(2 * k + 1, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("paths need n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graphs need n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K1,leaves with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


_FIXED = {
    "petersen": petersen,
    "diamond": lambda: CATALOG[0].graph(),
    "paw": lambda: CATALOG[1].graph(),
    "triangle": lambda: complete(3),
    "2K2": lambda: CATALOG[6].graph(),
}

_PATTERNS = [
    (re.compile(r"^C(\d+)$"), lambda m: cycle(int(m[1]))),
    (re.compile(r"^P(\d+)$"), lambda m: path(int(m[1]))),
    (re.compile(r"^K(\d+)$"), lambda m: complete(int(m[1]))),
    (re.compile(r"^K1,(\d+)$"), lambda m: star(int(m[1]))),
    (re.compile(r"^K(\d+),(\d+)$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^star:(\d+)$"), lambda m: star(int(m[1]))),
    (re.compile(r"^friendship:(\d+)$"), lambda m: friendship_graph(int(m[1]))),
    (re.compile(r"^F(\d+)$"), lambda m: CATALOG[int(m[1]) - 1].graph() if 1 <= int(m[1]) <= 10 else None),
]

NAMED_GRAPH_HELP = (
    "Cn, Pn, Kn, K1,n, Ka,b, star:n, friendship:k, F1..F10, diamond, paw, triangle, 2K2, petersen"
)


def named_graph(name: str) -> Graph:
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    for pattern, build in _PATTERNS:
        m = pattern.match(name)
        if m:
            g = build(m)
            if g is not None:
                return g
    raise KeyError(f"unknown graph name {name!r} (known: {NAMED_GRAPH_HELP})")


def _closes_clique(masks: list[int], u: int, v: int, k: int) -> bool:
    """Would edge uv complete a K_k?  Only k in (3, 4) is needed."""
    common = masks[u] & masks[v]
    if k == 3:
        return common != 0
    if k == 4:
        return any(masks[w] & common for w in iter_bits(common))
    raise ValueError(k)


def random_k4_free(n: int, p: float, seed: int, forbid: int = 4) -> Graph:
    """Incremental-rejection sampler, then components joined by random bridges.

    Edges are visited in a seeded random order and kept with probability p
    unless they would close a K_forbid (forbid=3 gives triangle-free
    graphs).  An edge between two components never closes a clique, so
    the joining pass preserves the property.  Not uniform over K4-free graphs.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    masks = [0] * n
    for u, v in pairs:
        if rng.random() < p and not _closes_clique(masks, u, v, forbid):
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    comps = _components(masks)
    rng.shuffle(comps)
    for k in range(1, len(comps)):
        u = rng.choice(comps[k])
        v = rng.choice(comps[rng.randrange(k)])
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph.from_masks(masks)


def _components(masks: list[int]) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(len(masks)):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(sorted(iter_bits(comp)))
    return comps


def labeled_graphs(n: int, forbid: Optional[int] = None, connected: bool = False) -> Iterator[Graph]:
    """Every labeled graph on n vertices, optionally K_forbid-free and/or connected.

    Edge subsets of K_n are walked by backtracking in lexicographic edge
    order; a subset is pruned as soon as it closes a forbidden clique.
    """
    pairs = list(combinations(range(n), 2))
    masks = [0] * n

    def rec(k: int):
        if k == len(pairs):
            g = Graph.from_masks(masks)
            if not connected or is_connected(g):
                yield g
            return
        yield from rec(k + 1)
        u, v = pairs[k]
        if forbid is None or not _closes_clique(masks, u, v, forbid):
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            yield from rec(k + 1)
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)

    yield from rec(0)
