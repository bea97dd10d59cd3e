"""Simple undirected graphs on dense vertex indices 0..n-1.

Adjacency is kept both as sorted neighbour tuples and as integer bitmasks;
the masks are what the packing search and the oracle actually iterate on.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

INF = math.inf

G6_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class UnsupportedSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, row in enumerate(self.adj):
            for v in row:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        return cls(len(masks), tuple(tuple(iter_bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in row) for row in self.adj)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges (u, v) with u < v, in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def induced_edge_count(self, vs: Sequence[int]) -> int:
        mask = to_mask(vs)
        return sum(popcount(self.masks[v] & mask) for v in vs) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex v renamed to perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


# -- graph6 -----------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string at byte offset 0")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} out of range at byte offset {i}")
    n = ord(s[0]) - 63
    if n > G6_MAX_N:
        raise Graph6Error(
            f"header at byte offset 0 announces a long-format graph; only n <= {G6_MAX_N} is supported"
        )
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit vector: expected {nbytes} data bytes, got {len(body)} (ends at byte offset {len(s)})"
        )
    if len(body) > nbytes:
        raise Graph6Error(f"trailing data at byte offset {1 + nbytes}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error(f"non-zero padding bits in final byte at byte offset {len(s) - 1}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > G6_MAX_N:
        raise UnsupportedSizeError(f"graph6 short format holds n <= {G6_MAX_N}, got n={g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# -- distances and connectivity ----------------------------------------------


def distances_from(g: Graph, v: int) -> list:
    """BFS levels from v; unreachable vertices get INF."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    dist = [INF] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] is INF:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list]:
    return [distances_from(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    masks = g.masks
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.all_mask


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


# -- cliques -----------------------------------------------------------------


def _color_bound(masks: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring of cand; returns (vertex, colour) in colour order."""
    order = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~masks[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append((v, color))
    return order


def clique_number(g: Graph) -> int:
    """Exact maximum clique size, branch and bound with a colouring bound."""
    if g.n == 0:
        return 0
    masks = g.masks
    best = 1

    def expand(size: int, cand: int):
        nonlocal best
        order = _color_bound(masks, cand)
        for v, color in reversed(order):
            if size + color <= best:
                return
            new_size = size + 1
            sub = cand & masks[v]
            if sub:
                expand(new_size, sub)
            elif new_size > best:
                best = new_size
            cand &= ~(1 << v)

    expand(0, g.all_mask)
    return best


def has_k4(g: Graph) -> bool:
    masks = g.masks
    for u, v in g.edges:
        common = masks[u] & masks[v]
        for w in iter_bits(common):
            if masks[w] & common:
                return True
    return False


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2
