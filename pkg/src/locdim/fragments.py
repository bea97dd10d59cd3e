"""The ten small fragment classes used by the local vertex division.

F1..F9 are the non-complete graphs on at most four vertices without
isolated vertices; F10 is K1.  Recognition dispatches on
(order, edge count, sorted degree sequence), which separates all ten.

Each placement stores its vertices in slot order, so ``p.vertices[k]`` is
the vertex playing ``cls.role_names[k]``.  Slot conventions:

  F1 diamond   a1 a2 a3 a4   a1, a3 of degree 3; a2, a4 of degree 2
  F2 paw       b1 b2 b3 b4   b2 of degree 3, b3 the pendant, b1 b4 of degree 2
  F3 triangle  c1 c2 c3
  F4 C4        v1 v2 v3 v4   in cycle order starting at the smallest vertex
  F5 P4        v1 v2 v3 v4   in path order starting at the smaller end
  F6 K1,3      v1 v2 v3 v4   three leaves, then the centre
  F7 2K2       v1 v2 v3 v4   edges v1v2 and v3v4
  F8 P3        v1 v2 v3      v2 is the middle vertex
  F9 K2        v1 v2
  F10 K1       v1

Ties inside an automorphism orbit go to the smaller vertex index in the
alphabetically earlier slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graph import Graph, to_mask


@dataclass(frozen=True)
class FragmentClass:
    id: int
    name: str
    order: int
    role_names: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]  # over slot positions

    @property
    def label(self) -> str:
        return f"F{self.id}"

    def graph(self) -> Graph:
        return Graph.from_edges(self.order, self.edges)


def _slots(prefix: str, k: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, k + 1))


F1 = FragmentClass(1, "diamond", 4, _slots("a", 4), ((0, 3), (3, 2), (0, 2), (0, 1), (2, 1)))
F2 = FragmentClass(2, "paw", 4, _slots("b", 4), ((0, 1), (1, 3), (0, 3), (1, 2)))
F3 = FragmentClass(3, "triangle", 3, _slots("c", 3), ((0, 1), (1, 2), (0, 2)))
F4 = FragmentClass(4, "C4", 4, _slots("v", 4), ((0, 1), (1, 2), (2, 3), (0, 3)))
F5 = FragmentClass(5, "P4", 4, _slots("v", 4), ((0, 1), (1, 2), (2, 3)))
F6 = FragmentClass(6, "K1,3", 4, _slots("v", 4), ((0, 3), (1, 3), (2, 3)))
F7 = FragmentClass(7, "2K2", 4, _slots("v", 4), ((0, 1), (2, 3)))
F8 = FragmentClass(8, "P3", 3, _slots("v", 3), ((0, 1), (1, 2)))
F9 = FragmentClass(9, "K2", 2, _slots("v", 2), ((0, 1),))
F10 = FragmentClass(10, "K1", 1, _slots("v", 1), ())

CATALOG: tuple[FragmentClass, ...] = (F1, F2, F3, F4, F5, F6, F7, F8, F9, F10)


def fragment_class(key) -> FragmentClass:
    """Look up a class by id (1..10), label ("F4") or name ("paw")."""
    if isinstance(key, FragmentClass):
        return key
    if isinstance(key, int):
        if 1 <= key <= 10:
            return CATALOG[key - 1]
    else:
        for cls in CATALOG:
            if key in (cls.label, cls.name):
                return cls
    raise KeyError(f"unknown fragment class {key!r}")


@dataclass(frozen=True)
class FragmentPlacement:
    cls_id: int
    vertices: tuple[int, ...]  # slot order

    @property
    def cls(self) -> FragmentClass:
        return CATALOG[self.cls_id - 1]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    @property
    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    @property
    def role_map(self) -> dict[str, int]:
        return dict(zip(self.cls.role_names, self.vertices))

    def role(self, name: str) -> int:
        return self.vertices[self.cls.role_names.index(name)]

    def to_json(self) -> dict:
        return {"class": self.cls.label, "vertices": list(self.vertices), "roles": self.role_map}


# (order, edge count, sorted degrees) -> class id
_DISPATCH = {
    (4, 5, (2, 2, 3, 3)): 1,
    (4, 4, (1, 2, 2, 3)): 2,
    (3, 3, (2, 2, 2)): 3,
    (4, 4, (2, 2, 2, 2)): 4,
    (4, 3, (1, 1, 2, 2)): 5,
    (4, 3, (1, 1, 1, 3)): 6,
    (4, 2, (1, 1, 1, 1)): 7,
    (3, 2, (1, 1, 2)): 8,
    (2, 1, (1, 1)): 9,
    (1, 0, (0,)): 10,
}


def _assign_roles(cid: int, vs: list[int], deg: dict[int, int], nb: dict[int, int]) -> tuple[int, ...]:
    def adjacent(u, v):
        return (nb[u] >> v) & 1

    if cid == 1:
        hi = [v for v in vs if deg[v] == 3]
        lo = [v for v in vs if deg[v] == 2]
        return (hi[0], lo[0], hi[1], lo[1])
    if cid == 2:
        centre = next(v for v in vs if deg[v] == 3)
        pendant = next(v for v in vs if deg[v] == 1)
        side = [v for v in vs if deg[v] == 2]
        return (side[0], centre, pendant, side[1])
    if cid in (3, 9, 10):
        return tuple(vs)
    if cid == 4:
        first = vs[0]
        n1, n2 = [v for v in vs if adjacent(first, v)]
        opposite = next(v for v in vs if v not in (first, n1, n2))
        return (first, n1, opposite, n2)
    if cid == 5:
        start = next(v for v in vs if deg[v] == 1)
        path = [start]
        while len(path) < 4:
            path.append(next(v for v in vs if adjacent(path[-1], v) and v not in path))
        return tuple(path)
    if cid == 6:
        centre = next(v for v in vs if deg[v] == 3)
        return tuple(v for v in vs if v != centre) + (centre,)
    if cid == 7:
        first = vs[0]
        mate = next(v for v in vs if adjacent(first, v))
        rest = [v for v in vs if v not in (first, mate)]
        return (first, mate, rest[0], rest[1])
    if cid == 8:
        middle = next(v for v in vs if deg[v] == 2)
        ends = [v for v in vs if deg[v] == 1]
        return (ends[0], middle, ends[1])
    raise AssertionError(cid)


def classify_induced(g: Graph, vs: Sequence[int]) -> Optional[FragmentPlacement]:
    """Recognise g[vs] as a catalog class, or return None (K4 and graphs with isolated vertices)."""
    if not 1 <= len(vs) <= 4:
        raise ValueError(f"fragments have 1 to 4 vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertices in {tuple(vs)}")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return _classify(g.masks, sorted(vs))


def _classify(masks: Sequence[int], svs: list[int]) -> Optional[FragmentPlacement]:
    mask = 0
    for v in svs:
        mask |= 1 << v
    nb = {v: masks[v] & mask for v in svs}
    deg = {v: bin(nb[v]).count("1") for v in svs}
    degs = tuple(sorted(deg.values()))
    cid = _DISPATCH.get((len(svs), sum(degs) // 2, degs))
    if cid is None:
        return None
    return FragmentPlacement(cid, _assign_roles(cid, svs, deg, nb))


def enumerate_placements(
    g: Graph, cls, allowed: Optional[Iterable[int]] = None
) -> list[FragmentPlacement]:
    """All induced occurrences of cls inside ``allowed``, sorted by vertex set."""
    cls = fragment_class(cls)
    pool = sorted(set(range(g.n) if allowed is None else allowed))
    masks = g.masks
    out = []
    for combo in combinations(pool, cls.order):
        p = _classify(masks, list(combo))
        if p is not None and p.cls_id == cls.id:
            out.append(p)
    return out
