"""Build a local resolving set of size at most floor(n/2) for K4-free graphs.

The construction keeps a set S of vertices *outside* the resolving set;
the certificate's set is W = V(G) - S.  It starts from the per-fragment
selection on the local vertex division, then absorbs the F3 triangles
(whose vertices all start in W) in fifteen fixed-point processes.  Each
process trades fragment vertices for triangle vertices so that every
fragment/triangle group keeps at least half its vertices in S.

Whenever several vertices or indices qualify for a step, the smallest is
taken, so a run is fully determined by the division.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional

from .fragments import FragmentPlacement
from .graph import Graph, clique_number, iter_bits, to_mask
from .oracle import DistanceTable
from .packing import (
    DEFAULT_NODE_CAP,
    Division,
    FactReport,
    check_division_facts,
    local_vertex_division,
    require_valid_input,
)


class ConstructionError(RuntimeError):
    """A process step could not be carried out as prescribed."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])


class DivisionFactError(RuntimeError):
    def __init__(self, report: FactReport):
        fails = "; ".join(f"{r.name}: {r.witness}" for r in report.failures())
        super().__init__(f"division facts failed: {fails}")
        self.report = report


@dataclass(frozen=True)
class TraceStep:
    process: int
    step: str
    consumed: tuple[int, ...]  # vertices leaving S
    produced: tuple[int, ...]  # vertices entering S
    absorbed: tuple[int, ...] = ()  # F3 layer indices handled by this step
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "process": self.process,
            "step": self.step,
            "consumed": list(self.consumed),
            "produced": list(self.produced),
            "absorbed": list(self.absorbed),
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class DiamondPair:
    """A leftover triangle paired with an adjacent F1 diamond.

    h = (h1, h2, h3, h4) with h2, h4 of degree 2 in the diamond; f = (f1, f2, f3)
    with f2 adjacent and f1 non-adjacent to h2.
    """

    triangle: int
    host: int
    h: tuple[int, int, int, int]
    f: tuple[int, int, int]


@dataclass(frozen=True)
class PawPair:
    """A leftover triangle paired with an adjacent F2 paw.

    h = (b1, b2, b3, b4) of the paw; f2 adjacent and f1 non-adjacent to b2.
    """

    triangle: int
    host: int
    h: tuple[int, int, int, int]
    f: tuple[int, int, int]


@dataclass
class ProcessState:
    S: set[int]
    A: set[int] = field(default_factory=set)
    Z1: set[int] = field(default_factory=set)
    Z2: set[int] = field(default_factory=set)
    pairs1: list[DiamondPair] = field(default_factory=list)
    pairs2: list[PawPair] = field(default_factory=list)
    pool10: list[int] = field(default_factory=list)
    pools: dict = field(default_factory=dict)
    trace: list[TraceStep] = field(default_factory=list)

    def apply(self, process: int, step: str, remove=(), add=(), absorbed=(), note=""):
        # a vertex both removed and re-added ends up in S
        before = set(self.S)
        self.S = (self.S - set(remove)) | set(add)
        consumed = tuple(sorted(before - self.S))
        produced = tuple(sorted(self.S - before))
        self.trace.append(TraceStep(process, step, consumed, produced, tuple(sorted(absorbed)), note))


# -- initial selection -------------------------------------------------------


def _first_nonadjacent_pair(g: Graph, p: FragmentPlacement) -> tuple[int, int]:
    for u, v in combinations(p.sorted_vertices, 2):
        if not g.has_edge(u, v):
            return u, v
    raise AssertionError(f"{p.vertices} has no non-adjacent pair")


def initial_selection(g: Graph, d: Division) -> set[int]:
    S: set[int] = set()
    for p in d.layer(1):
        S.update((p.role("a2"), p.role("a4")))
    for p in d.layer(2):
        S.update((p.role("b2"), p.role("b4")))
    for i in (4, 5, 6, 7):
        for p in d.layer(i):
            S.update(_first_nonadjacent_pair(g, p))
    for p in d.layer(8):
        S.update((p.vertices[0], p.vertices[2]))
    for p in d.layer(9):
        S.add(min(p.vertices))
    for p in d.layer(10):
        S.add(p.vertices[0])
    return S


# -- neighbourhood helpers ---------------------------------------------------


def eta(g: Graph, d: Division, host_mask: int, absorbed) -> list[int]:
    """Indices of unabsorbed F3 triangles joined to the vertex set host_mask by an edge."""
    out = []
    for t, tri in enumerate(d.layer(3)):
        if t in absorbed:
            continue
        if any(g.masks[c] & host_mask for c in tri.vertices):
            out.append(t)
    return out


def distinguished_pairs(U, Y, g: Graph, table: Optional[DistanceTable] = None, d: Optional[Division] = None):
    """One distinguished triangle edge per triangle of Y, if any vertex of U separates one.

    Y holds triangles either as vertex tuples or as F3 layer indices (then d
    is required).  Returns a list of sorted pairs, one per qualifying
    triangle, in the order of Y; per triangle the lexicographically first
    qualifying edge is used.
    """
    table = table or DistanceTable(g)
    dist = table.dist
    U = sorted(U)
    out = []
    for tri in Y:
        vs = d.layer(3)[tri].vertices if isinstance(tri, int) else tri
        for x, y in combinations(sorted(vs), 2):
            if any(dist[u][x] != dist[u][y] for u in U):
                out.append((x, y))
                break
    return out


def _flatten(pairs) -> set[int]:
    return {v for p in pairs for v in p}


def max_edgeless_subset(g: Graph, X) -> tuple[int, ...]:
    X = sorted(X)
    for k in range(len(X), 0, -1):
        for sub in combinations(X, k):
            if not any(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                return sub
    return ()


# -- pairing before the 4th process -------------------------------------------


def _label_diamond(g: Graph, host: FragmentPlacement, tri: FragmentPlacement):
    a1, a2, a3, a4 = host.vertices
    options = []
    for h1, h3 in ((a1, a3), (a3, a1)):
        for h2, h4 in ((a2, a4), (a4, a2)):
            for f1, f2, f3 in permutations(tri.vertices):
                if not g.has_edge(f1, h2) and g.has_edge(f2, h2):
                    options.append(((h1, h2, h3, h4), (f1, f2, f3)))
    return min(options) if options else None


def _label_paw(g: Graph, host: FragmentPlacement, tri: FragmentPlacement):
    b2 = host.role("b2")
    options = [
        (tuple(host.vertices), (f1, f2, f3))
        for f1, f2, f3 in permutations(tri.vertices)
        if g.has_edge(f2, b2) and not g.has_edge(f1, b2)
    ]
    return min(options) if options else None


def pair_leftover_triangles(g: Graph, d: Division, state: ProcessState) -> None:
    tris = d.layer(3)
    used1: set[int] = set()
    used2: set[int] = set()
    for t in range(len(tris)):
        if t in state.A:
            continue
        tri = tris[t]
        tmask = 0
        for c in tri.vertices:
            tmask |= g.masks[c]
        paired = False
        for k, host in enumerate(d.layer(1)):
            if tmask & host.mask and k not in used1:
                lab = _label_diamond(g, host, tri)
                if lab:
                    state.pairs1.append(DiamondPair(t, k, *lab))
                    used1.add(k)
                    paired = True
                    break
        if paired:
            continue
        for k, host in enumerate(d.layer(2)):
            if tmask & host.mask and k not in used2:
                lab = _label_paw(g, host, tri)
                if lab:
                    state.pairs2.append(PawPair(t, k, *lab))
                    used2.add(k)
                    paired = True
                    break
        if not paired:
            raise ConstructionError(
                f"triangle {tri.vertices} left after the 3rd process has no admissible F1/F2 partner",
                state.trace,
            )


# -- the fifteen processes ------------------------------------------------------


def run_processes(g: Graph, d: Division, S0, strict: bool = False, table: Optional[DistanceTable] = None) -> ProcessState:
    table = table or DistanceTable(g)
    state = ProcessState(S=set(S0))
    if not d.layer(3):
        return state
    adj = g.has_edge
    tris = d.layer(3)

    def D(U, Y):
        return _flatten(distinguished_pairs(U, Y, g, table, d))

    # 1st process: diamonds touching two or more triangles
    while d.layer(1):
        etas = [eta(g, d, h.mask, state.A) for h in d.layer(1)]
        k = max(range(len(etas)), key=lambda i: (len(etas[i]), -i))
        H, Y = d.layer(1)[k], etas[k]
        if len(Y) <= 1:
            break
        if len(Y) >= 4:
            state.apply(1, "1.4", remove=H.vertices, add=D(H.vertices, Y), absorbed=Y)
        else:
            qualifying = [
                h for h in sorted(H.vertices)
                if eta(g, d, H.mask & ~(1 << h), state.A) == Y
            ]
            if qualifying:
                h = qualifying[0]
                rest = [v for v in H.vertices if v != h]
                state.apply(1, "1.5", remove=H.vertices, add=D(rest, Y) | {h}, absorbed=Y)
            elif strict:
                raise ConstructionError(f"(1.5): no vertex of F1 {H.vertices} preserves eta", state.trace)
            else:
                state.apply(1, "1.5", remove=H.vertices, add=D(H.vertices, Y), absorbed=Y,
                            note="no eta-preserving vertex; handled as (1.4)")
        state.A.update(Y)

    # 2nd process: paws touching two or more triangles
    while d.layer(2):
        etas = [eta(g, d, h.mask, state.A) for h in d.layer(2)]
        k = max(range(len(etas)), key=lambda i: (len(etas[i]), -i))
        H, Y = d.layer(2)[k], etas[k]
        if len(Y) <= 1:
            break
        touched = 0
        for t in Y:
            touched |= tris[t].mask
        b1, b2, _, b4 = H.vertices
        qualifying = [h for h in sorted((b1, b2, b4)) if not g.masks[h] & touched]
        if not qualifying:
            raise ConstructionError(f"(2.4): every vertex of F2 {H.vertices} of degree >= 2 meets a triangle",
                                    state.trace)
        h = qualifying[0]
        rest = [v for v in H.vertices if v != h]
        state.apply(2, "2.4", remove=H.vertices, add=D(rest, Y) | {h}, absorbed=Y)
        state.A.update(Y)

    # 3rd process: triangles reachable from a diamond hub or a non-hub paw vertex
    for t in range(len(tris)):
        if t in state.A:
            continue
        F = tris[t]
        fmask = F.mask
        done = False
        for H in d.layer(1):
            for h in sorted((H.role("a1"), H.role("a3"))):
                if g.masks[h] & fmask:
                    state.apply(3, "3.3", add=D([h], [t]), absorbed=[t])
                    done = True
                    break
            if done:
                break
        if done:
            state.A.add(t)
            continue
        for H in d.layer(2):
            b1, b2, b3, b4 = H.vertices
            for h in sorted((b1, b3, b4)):
                if g.masks[h] & fmask:
                    h1 = min(v for v in (b1, b4) if v != h)
                    state.apply(3, "3.4", remove=H.vertices, add={h1, b2} | D([h], [t]), absorbed=[t])
                    done = True
                    break
            if done:
                break
        if done:
            state.A.add(t)

    if len(state.A) == len(tris):
        return state

    pair_leftover_triangles(g, d, state)
    P1, P2 = state.pairs1, state.pairs2
    state.Z1 = set(range(len(P1)))
    state.Z2 = set(range(len(P2)))

    def swap_in(i):
        h1, h2, h3, h4 = P1[i].h
        f1, f2, _ = P1[i].f
        return h2, {h3, f1, f2}

    def hits_h1_h4(v, i):
        return adj(v, P1[i].h[0]) and adj(v, P1[i].h[3])

    # 4th process: an F10 vertex sees h1 and h4
    state.pool10 = [p.vertices[0] for p in d.layer(10)]
    while True:
        hit = next(((i, x) for i in sorted(state.Z1) for x in state.pool10 if hits_h1_h4(x, i)), None)
        if hit is None:
            break
        i, x = hit
        out, into = swap_in(i)
        state.apply(4, "4.3", remove={x, out}, add=into, absorbed=[P1[i].triangle])
        state.Z1.discard(i)
        state.pool10.remove(x)

    # 5th-7th processes: F9, F8 and the halves of F7
    for process, layer, halves in ((5, 9, None), (6, 8, None), (7, 7, ((0, 1), (2, 3)))):
        if halves is None:
            pools = [set(p.vertices) for p in d.layer(layer)]
        else:
            pools = [{p.vertices[a], p.vertices[b]} for p in d.layer(layer) for a, b in halves]
        state.pools[layer] = pools
        while True:
            hit = next(
                ((i, j, x) for i in sorted(state.Z1) for j in range(len(pools))
                 for x in sorted(pools[j]) if hits_h1_h4(x, i)),
                None,
            )
            if hit is None:
                break
            i, j, x = hit
            out, into = swap_in(i)
            state.apply(process, f"{process}.3", remove={x, out}, add=(pools[j] - {x}) | into,
                        absorbed=[P1[i].triangle])
            state.Z1.discard(i)
            pools[j].discard(x)

    # 8th process: stars; with more than two pool vertices only leaves are added
    pools6 = [set(p.vertices) for p in d.layer(6)]
    leaves6 = [set(p.vertices[:3]) for p in d.layer(6)]
    state.pools[6] = pools6
    while True:
        hit = next(
            ((i, j, v) for i in sorted(state.Z1) for j in range(len(pools6))
             for v in sorted(pools6[j]) if hits_h1_h4(v, i)),
            None,
        )
        if hit is None:
            break
        i, j, v = hit
        out, into = swap_in(i)
        extra = pools6[j] if len(pools6[j]) <= 2 else pools6[j] & leaves6[j]
        state.apply(8, "8.3", remove={v, out}, add=(extra - {v}) | into, absorbed=[P1[i].triangle])
        state.Z1.discard(i)
        pools6[j].discard(v)

    # 9th-10th processes: P4 and C4, keeping a maximum edgeless rest
    for process, layer in ((9, 5), (10, 4)):
        pools = [set(p.vertices) for p in d.layer(layer)]
        state.pools[layer] = pools
        while True:
            hit = next(
                ((i, j, v) for i in sorted(state.Z1) for j in range(len(pools))
                 for v in sorted(pools[j]) if hits_h1_h4(v, i)),
                None,
            )
            if hit is None:
                break
            i, j, v = hit
            out, into = swap_in(i)
            xbar = set(max_edgeless_subset(g, pools[j] - {v}))
            state.apply(process, f"{process}.3", remove={v, out}, add=xbar | into, absorbed=[P1[i].triangle])
            state.Z1.discard(i)
            pools[j].discard(v)

    # 11th process: a paw pendant sees h1 and h4 of a diamond
    while True:
        hit = next(
            ((i, j) for i in sorted(state.Z1) for j in sorted(state.Z2)
             if hits_h1_h4(P2[j].h[2], i)),
            None,
        )
        if hit is None:
            break
        i, j = hit
        out, into = swap_in(i)
        state.apply(11, "11.3", remove={out}, add=into | {P2[j].f[0]},
                    absorbed=[P1[i].triangle, P2[j].triangle])
        state.Z1.discard(i)
        state.Z2.discard(j)

    # 12th process: the paw's b4 sees h1 and h4 of a diamond
    while True:
        if strict:
            hit = next(
                ((i, j) for i in sorted(state.Z1) for j in sorted(state.Z1)
                 if j < len(P2) and hits_h1_h4(P2[j].h[3], i)),
                None,
            )
        else:
            hit = next(
                ((i, j) for i in sorted(state.Z1) for j in sorted(state.Z2)
                 if hits_h1_h4(P2[j].h[3], i)),
                None,
            )
        if hit is None:
            break
        i, j = hit
        out, into = swap_in(i)
        b1, b2, b3, b4 = P2[j].h
        g1, g2, _ = P2[j].f
        state.apply(12, "12.3", remove={out, b2, b4}, add=into | {b3, g1, g2},
                    absorbed=[P1[i].triangle, P2[j].triangle])
        if strict:
            state.Z1 -= {i, j}
        else:
            state.Z1.discard(i)
            state.Z2.discard(j)

    # 13th process: remaining diamond pairs
    for i in sorted(state.Z1):
        out, into = swap_in(i)
        state.apply(13, "13.3", remove={out}, add=into, absorbed=[P1[i].triangle])
    state.Z1.clear()

    # 14th process: an F10 vertex sees the paw's b2 and b3
    while True:
        hit = next(
            ((i, x) for i in sorted(state.Z2) for x in state.pool10
             if adj(x, P2[i].h[1]) and adj(x, P2[i].h[2])),
            None,
        )
        if hit is None:
            break
        i, x = hit
        b1, b2, b3, b4 = P2[i].h
        g1, g2, _ = P2[i].f
        state.apply(14, "14.3", remove={x, b2}, add={b3, g1, g2}, absorbed=[P2[i].triangle])
        state.Z2.discard(i)
        state.pool10.remove(x)

    # 15th process: remaining paw pairs
    for i in sorted(state.Z2):
        b1, b2, b3, b4 = P2[i].h
        g1, g2, _ = P2[i].f
        state.apply(15, "15.3", remove={b2}, add={b3, g1, g2}, absorbed=[P2[i].triangle])
    state.Z2.clear()
    return state


# -- certificate ---------------------------------------------------------------


@dataclass
class Certificate:
    n: int
    omega: int
    W: tuple[int, ...]
    bound: int
    bound_ok: bool
    local_resolving: bool
    repair_performed: bool
    repaired: tuple[int, ...]
    witness: dict[tuple[int, int], int]
    trace: list[TraceStep]
    division: Division

    @property
    def size(self) -> int:
        return len(self.W)

    @property
    def clean(self) -> bool:
        return self.bound_ok and not self.repair_performed

    def to_json(self, include_trace: bool = True) -> dict:
        out = {
            "n": self.n,
            "omega": self.omega,
            "W": list(self.W),
            "size": self.size,
            "bound": self.bound,
            "bound_ok": self.bound_ok,
            "local_resolving": self.local_resolving,
            "repair_performed": self.repair_performed,
            "repaired": list(self.repaired),
            "witness": {f"{u}-{v}": w for (u, v), w in sorted(self.witness.items())},
        }
        if include_trace:
            out["trace"] = [s.to_json() for s in self.trace]
        return out

    def dumps(self, include_trace: bool = True) -> str:
        return json.dumps(self.to_json(include_trace), sort_keys=True)


def construct_certificate(g: Graph, strict: bool = False, node_cap: int = DEFAULT_NODE_CAP) -> Certificate:
    require_valid_input(g)
    d = local_vertex_division(g, node_cap=node_cap)
    report = check_division_facts(g, d)
    if not report.ok:
        raise DivisionFactError(report)
    table = DistanceTable(g)
    state = run_processes(g, d, initial_selection(g, d), strict=strict, table=table)

    S = set(state.S)
    repaired = []
    while True:
        wmask = g.all_mask & ~to_mask(S)
        bad = table.first_unresolved(wmask)
        if bad is None:
            break
        u = bad[0]
        S.discard(u)
        repaired.append(u)

    W = tuple(sorted(set(range(g.n)) - S))
    wmask = to_mask(W)
    witness = {}
    for u, v in g.edges:
        if not (wmask >> u) & 1 and not (wmask >> v) & 1:
            witness[(u, v)] = table.witness(wmask, u, v)
    return Certificate(
        n=g.n,
        omega=clique_number(g),
        W=W,
        bound=g.n // 2,
        bound_ok=len(W) <= g.n // 2,
        local_resolving=True,
        repair_performed=bool(repaired),
        repaired=tuple(repaired),
        witness=witness,
        trace=state.trace,
        division=d,
    )
