"""Brute-force ground truth for local resolving sets.

For an edge uv, the vertices distinguishing u and v always include u and v
themselves, so W is a local resolving set exactly when W meets every
edge's distinguisher set.  dim_l is therefore a minimum hitting set over
those masks, found here by plain enumeration in increasing size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, all_pairs_distances, clique_number, is_bipartite, is_complete, is_connected, to_mask

DEFAULT_EXACT_CAP = 16


class DisconnectedGraphError(ValueError):
    pass


class OracleCapError(ValueError):
    pass


class DistanceTable:
    """All-pairs BFS distances plus, per edge, the mask of distinguishing vertices."""

    def __init__(self, g: Graph):
        if not is_connected(g):
            raise DisconnectedGraphError("distances are infinite in a disconnected graph")
        self.g = g
        self.dist = all_pairs_distances(g)
        self.edge_masks: list[int] = []
        for u, v in g.edges:
            self.edge_masks.append(
                to_mask(w for w in range(g.n) if self.dist[w][u] != self.dist[w][v])
            )

    def distinguishes(self, w: int, u: int, v: int) -> bool:
        return self.dist[w][u] != self.dist[w][v]

    def first_unresolved(self, wmask: int) -> Optional[tuple[int, int]]:
        for e, m in zip(self.g.edges, self.edge_masks):
            if not m & wmask:
                return e
        return None

    def witness(self, wmask: int, u: int, v: int) -> Optional[int]:
        """Smallest vertex of W distinguishing u and v."""
        for w in range(self.g.n):
            if (wmask >> w) & 1 and self.dist[w][u] != self.dist[w][v]:
                return w
        return None


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failing_edge: Optional[tuple[int, int]] = None

    def __bool__(self):
        return self.ok


def is_local_resolving(g: Graph, W: Iterable[int], table: Optional[DistanceTable] = None) -> Verdict:
    W = set(W)
    for w in W:
        if not 0 <= w < g.n:
            raise ValueError(f"vertex {w} out of range for n={g.n}")
    table = table or DistanceTable(g)
    bad = table.first_unresolved(to_mask(W))
    return Verdict(bad is None, bad)


def local_metric_dimension(g: Graph, cap: int = DEFAULT_EXACT_CAP, table: Optional[DistanceTable] = None):
    """Exact dim_l and the first minimum witness (by size, then lexicographically)."""
    if g.n > cap:
        raise OracleCapError(f"n = {g.n} exceeds the exact-search cap {cap}")
    table = table or DistanceTable(g)
    masks = table.edge_masks
    if not masks:
        return 0, ()
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            w = 0
            for v in combo:
                w |= 1 << v
            if all(m & w for m in masks):
                return k, combo
    raise AssertionError("V(G) always resolves")


@dataclass(frozen=True)
class BoundCheck:
    name: str
    holds: bool
    value: int
    bound: str  # exact rational as text, e.g. "12/5"
    slack: str

    def to_json(self) -> dict:
        return {"name": self.name, "holds": self.holds, "value": self.value, "bound": self.bound, "slack": self.slack}


def _upper(name, value, bound: Fraction) -> BoundCheck:
    return BoundCheck(name, value <= bound, value, str(bound), str(bound - value))


def _lower(name, value, bound: Fraction) -> BoundCheck:
    return BoundCheck(name, value >= bound, value, str(bound), str(value - bound))


@dataclass
class BoundReport:
    n: int
    omega: int
    dim_l: int
    witness: tuple[int, ...]
    checks: list[BoundCheck]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def __getitem__(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "omega": self.omega,
            "dim_l": self.dim_l,
            "witness": list(self.witness),
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


def check_known_bounds(g: Graph, cap: int = DEFAULT_EXACT_CAP) -> BoundReport:
    """Compute dim_l exactly and test every cited bound that applies to g."""
    k, witness = local_metric_dimension(g, cap=cap)
    n = g.n
    omega = clique_number(g)
    checks = []

    lower = max(math.ceil(math.log2(omega)) if omega else 0, n - 2 ** (n - omega))
    checks.append(_lower("clique_lower", k, Fraction(lower)))

    if omega >= 1:
        checks.append(_upper("clique_upper", k, Fraction(omega - 1, omega) * n))
        tight = Fraction(k) == Fraction(omega - 1, omega) * n
        complete = is_complete(g)
        checks.append(BoundCheck("clique_upper_tight_iff_complete", tight == complete, k,
                                 f"tight={tight}, complete={complete}", "0"))
        checks.append(BoundCheck("complete_iff_n_minus_1", (k == n - 1) == complete, k,
                                 str(n - 1), str(n - 1 - k)))
    if n >= 2:
        bip = is_bipartite(g)
        checks.append(BoundCheck("bipartite_iff_1", (k == 1) == bip, k, "1", str(k - 1)))
    if n >= 3:
        checks.append(BoundCheck("omega_n_minus_1_iff_n_minus_2", (k == n - 2) == (omega == n - 1),
                                 k, str(n - 2), str(n - 2 - k)))
    if omega == 2 and n >= 3:
        checks.append(_upper("triangle_free_two_fifths", k, Fraction(2, 5) * n))
    if omega <= 3 and n >= 4:
        checks.append(_upper("k4_free_half", k, Fraction(n // 2)))
    # unproved for omega >= 4: a failure here is a finding, not a bug
    if n >= omega + 1 >= 4:
        checks.append(_upper("clique_ratio_open", k, Fraction(omega - 2, omega - 1) * n))
    return BoundReport(n, omega, k, tuple(witness), checks)
