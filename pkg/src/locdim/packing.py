"""Maximum vertex-disjoint packings and the local vertex division.

The division peels off, in catalog order F1..F9, a *maximum* packing of
induced copies of each class from the shrinking residual graph; whatever
is left is a set of isolated vertices (F10).  Maximum, not maximal: the
structural facts checked below fail for merely maximal packings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional

from .fragments import CATALOG, F10, FragmentPlacement, classify_induced, enumerate_placements, fragment_class
from .graph import Graph, distances_from, has_k4, is_connected, iter_bits, popcount, to_mask

DEFAULT_NODE_CAP = 10**7


class InputContractError(ValueError):
    """The graph violates a precondition (disconnected, too small, contains K4)."""


class PackingBudgetError(RuntimeError):
    pass


def require_valid_input(g: Graph) -> None:
    if g.n < 4:
        raise InputContractError(f"n = {g.n} < 4")
    if not is_connected(g):
        raise InputContractError("graph is disconnected")
    if has_k4(g):
        raise InputContractError("graph contains K4")


def max_disjoint_packing(
    g: Graph, cls, allowed: Optional[Iterable[int]] = None, node_cap: int = DEFAULT_NODE_CAP
) -> list[FragmentPlacement]:
    """Maximum set of pairwise disjoint induced copies of cls inside allowed.

    Depth-first over placements in lexicographic order, include-first; the
    first optimum reached is kept, so the answer is the lexicographically
    first maximum packing.  The opening greedy pass coincides with the
    leftmost branch of that search and seeds the incumbent.  Pruning uses
    the bound min(#compatible candidates, #coverable vertices // order).
    """
    cls = fragment_class(cls)
    cands = enumerate_placements(g, cls, allowed)
    if not cands:
        return []
    cmasks = [p.mask for p in cands]
    order = cls.order
    total = len(cmasks)

    best: list[int] = []
    used = 0
    for k, m in enumerate(cmasks):
        if not m & used:
            best.append(k)
            used |= m
    nodes = 0

    def search(start: int, used: int, chosen: list[int]):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_cap:
            raise PackingBudgetError(
                f"packing search for {cls.label} exceeded node cap {node_cap}"
            )
        if len(chosen) > len(best):
            best = list(chosen)
        count = 0
        cover = 0
        for k in range(start, total):
            if not cmasks[k] & used:
                count += 1
                cover |= cmasks[k]
        if len(chosen) + min(count, popcount(cover) // order) <= len(best):
            return
        for k in range(start, total):
            m = cmasks[k]
            if m & used:
                continue
            chosen.append(k)
            search(k + 1, used | m, chosen)
            chosen.pop()

    search(0, 0, [])
    return [cands[k] for k in best]


@dataclass(frozen=True)
class Division:
    layers: tuple[tuple[FragmentPlacement, ...], ...]  # layers[i - 1] holds class Fi
    residual_trace: tuple[frozenset[int], ...]  # vertex sets of G1 .. G9

    def layer(self, i: int) -> tuple[FragmentPlacement, ...]:
        return self.layers[i - 1]

    def residual(self, i: int) -> frozenset[int]:
        """Vertex set of the stage graph G_i (i in 1..9)."""
        return self.residual_trace[i - 1]

    def layer_vertices(self, i: int) -> frozenset[int]:
        return frozenset(v for p in self.layer(i) for v in p.vertices)

    def placements(self) -> Iterable[FragmentPlacement]:
        for layer in self.layers:
            yield from layer

    def to_jsonl(self) -> str:
        lines = []
        for i, layer in enumerate(self.layers, start=1):
            for p in layer:
                lines.append(json.dumps({"layer": i, **p.to_json()}, sort_keys=True))
        return "\n".join(lines)


def local_vertex_division(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> Division:
    require_valid_input(g)
    residual = frozenset(range(g.n))
    layers = []
    trace = []
    for cls in CATALOG[:9]:
        trace.append(residual)
        layer = max_disjoint_packing(g, cls, residual, node_cap=node_cap)
        layers.append(tuple(layer))
        residual = residual - {v for p in layer for v in p.vertices}
    masks = g.masks
    rmask = to_mask(residual)
    for v in residual:
        assert not masks[v] & rmask, f"vertex {v} is not isolated after removing F9"
    layers.append(tuple(FragmentPlacement(F10.id, (v,)) for v in sorted(residual)))
    return Division(tuple(layers), tuple(trace))


# -- structural audit -----------------------------------------------------------


@dataclass
class FactResult:
    name: str
    passed: bool
    witness: Optional[str] = None


@dataclass
class FactReport:
    results: list[FactResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[FactResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> FactResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self) -> dict:
        return {r.name: {"passed": r.passed, "witness": r.witness} for r in self.results}


FACT_NAMES = (
    "partition", "fact1", "fact2", "fact3", "fact4", "fact5",
    "statement_I", "statement_II", "statement_III", "statement_IV",
)


def _partition(g: Graph, d: Division) -> Optional[str]:
    seen: dict[int, str] = {}
    for i, layer in enumerate(d.layers, start=1):
        for p in layer:
            if p.cls_id != i:
                return f"placement {p.vertices} of {p.cls.label} sits in layer {i}"
            got = classify_induced(g, p.vertices)
            if got is None or got.cls_id != i or got.vertex_set != p.vertex_set:
                return f"{p.vertices} does not induce F{i}"
            for v in p.vertices:
                if v in seen:
                    return f"vertex {v} appears in both {seen[v]} and F{i} {p.vertices}"
                seen[v] = f"F{i} {p.vertices}"
                if i <= 9 and v not in d.residual(i):
                    return f"vertex {v} of F{i} {p.vertices} is not in the residual graph G{i}"
    missing = sorted(set(range(g.n)) - set(seen))
    if missing:
        return f"vertex {missing[0]} is in no placement"
    return None


def _fact1(g, d):
    for h in d.layer(1):
        a1, a2, a3, a4 = h.vertices
        for v in range(g.n):
            if v in h.vertex_set:
                continue
            if (g.has_edge(v, a2) or g.has_edge(v, a4)) and g.has_edge(v, a1) and g.has_edge(v, a3):
                return f"v={v} sees a1, a3 and a degree-2 vertex of F1 {h.vertices}"
    return None


def _fact2(g, d):
    for h in d.layer(2):
        b1, b2, _, b4 = h.vertices
        for v in d.residual(2) - h.vertex_set:
            hits = [b for b in (b1, b2, b4) if g.has_edge(v, b)]
            if len(hits) > 1:
                return f"v={v} is adjacent to {hits} of F2 {h.vertices}"
    return None


def _has_cycle(g: Graph, vs: list[int], length: int) -> bool:
    for sub in combinations(vs, length):
        first, rest = sub[0], sub[1:]
        for perm in _cyclic_orders(rest):
            cyc = (first,) + perm
            if all(g.has_edge(cyc[k], cyc[(k + 1) % length]) for k in range(length)):
                return True
    return False


def _cyclic_orders(rest):
    for perm in permutations(rest):
        if perm[0] < perm[-1]:  # skip reversals
            yield perm


def _fact3(g, d):
    for h in d.layer(4):
        for v in d.residual(4) - h.vertex_set:
            hits = [u for u in h.vertices if g.has_edge(v, u)]
            if len(hits) > 2:
                return f"v={v} is adjacent to {hits} of F4 {h.vertices}"
            if _has_cycle(g, list(h.vertices) + [v], 3):
                return f"F4 {h.vertices} plus v={v} contains a triangle"
    return None


def _fact4(g, d):
    for h in d.layer(5):
        for v in d.residual(5) - h.vertex_set:
            hits = [u for u in h.vertices if g.has_edge(v, u)]
            if len(hits) > 2:
                return f"v={v} is adjacent to {hits} of F5 {h.vertices}"
            vs = list(h.vertices) + [v]
            for length in (3, 4):
                if _has_cycle(g, vs, length):
                    return f"F5 {h.vertices} plus v={v} contains a cycle of length {length}"
    return None


def _fact5(g, d):
    for i in (6, 7, 8, 9):
        for h in d.layer(i):
            for v in d.residual(i) - h.vertex_set:
                hits = [u for u in h.vertices if g.has_edge(v, u)]
                if len(hits) > 1:
                    return f"v={v} is adjacent to {hits} of F{i} {h.vertices}"
    return None


def _statement1(g, d):
    tris = d.layer(3)
    for s, t in combinations(tris, 2):
        for u in s.vertices:
            for v in t.vertices:
                if g.has_edge(u, v):
                    return f"edge {u}-{v} joins triangles {s.vertices} and {t.vertices}"
    return None


def _statement2(g, d):
    far = set()
    for i in range(4, 11):
        far |= d.layer_vertices(i)
    for t in d.layer(3):
        for u in t.vertices:
            for v in g.adj[u]:
                if v in far:
                    return f"edge {u}-{v} joins triangle {t.vertices} to a layer F4..F10 vertex"
    return None


def _statement3(g, d):
    near = d.layer_vertices(1) | d.layer_vertices(2)
    for t in d.layer(3):
        for v in sorted(near):
            dist = distances_from(g, v)
            for c in t.vertices:
                if dist[c] == 1 and all(dist[o] == 1 for o in t.vertices if o != c):
                    return f"v={v} is adjacent to {c} but distinguishes no edge at it in {t.vertices}"
    return None


def _statement4(g, d):
    tris = d.layer(3)
    for h in d.layer(2):
        touched = []
        for t in tris:
            nb = 0
            for c in t.vertices:
                nb |= g.masks[c]
            hit = nb & h.mask
            if hit:
                touched.append((t, hit))
        for (s, hs), (t, ht) in combinations(touched, 2):
            if popcount(hs | ht) != 1:
                return (
                    f"F2 {h.vertices} meets triangles {s.vertices} and {t.vertices} "
                    f"through {sorted(iter_bits(hs | ht))}"
                )
    return None


_CHECKS = (
    ("partition", _partition),
    ("fact1", _fact1),
    ("fact2", _fact2),
    ("fact3", _fact3),
    ("fact4", _fact4),
    ("fact5", _fact5),
    ("statement_I", _statement1),
    ("statement_II", _statement2),
    ("statement_III", _statement3),
    ("statement_IV", _statement4),
)


def check_division_facts(g: Graph, d: Division) -> FactReport:
    """Evaluate the partition invariant, facts 1-5 and statements I-IV.

    Statements I-IV are only claimed when F3 is non-empty; with no
    triangles they hold vacuously.  A failed partition check makes the
    other checks meaningless, so they are reported as not evaluated.
    """
    report = FactReport()
    witness = _partition(g, d)
    report.results.append(FactResult("partition", witness is None, witness))
    for name, check in _CHECKS[1:]:
        if witness is not None:
            report.results.append(FactResult(name, False, "not evaluated: partition invalid"))
            continue
        w = check(g, d)
        report.results.append(FactResult(name, w is None, w))
    return report


def audit_maximality(g: Graph, d: Division) -> Optional[str]:
    """Return a witness if some layer could take one more disjoint placement."""
    for i in range(1, 10):
        rest = d.residual(i) - d.layer_vertices(i)
        extra = enumerate_placements(g, i, rest)
        if extra:
            return f"layer F{i} can be extended by {extra[0].vertices}"
    return None
