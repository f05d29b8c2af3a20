"""Structural parameters of a profile.

Five numbers describe how far a profile is from an automatic consensus:
maximum range, average KT distance, consensus distance, blocking size and
unanimity width. The last three live on the non-unanimity graph, whose edges
join every pair of candidates the voters disagree on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import Profile, UnanimityOrder, unanimity_order
from .errors import BudgetExceededError

__all__ = [
    "NonUnanimityGraph",
    "ParameterReport",
    "UnanimityOrder",
    "avg_kt_distance",
    "blocking_size",
    "consensus_distance",
    "max_clique_exhaustive",
    "max_range",
    "non_unanimity_graph",
    "parameter_report",
    "pathwidth",
    "unanimity_width",
    "vertex_separation",
]

DEFAULT_PATHWIDTH_LIMIT = 20


@dataclass(frozen=True)
class NonUnanimityGraph:
    m: int
    adj: tuple  # adj[v] is a bitmask of neighbours

    @classmethod
    def from_edges(cls, m, edges) -> "NonUnanimityGraph":
        adj = [0] * m
        for a, b in edges:
            if a == b:
                raise ValueError("self loops are not allowed")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(m, tuple(adj))

    @property
    def edges(self) -> list:
        return [(a, b) for a in range(self.m) for b in range(a + 1, self.m) if self.adj[a] >> b & 1]

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)


def non_unanimity_graph(profile: Profile) -> NonUnanimityGraph:
    cost = profile.costs
    m = profile.m
    edges = [(a, b) for a, b in combinations(range(m), 2) if cost[a][b] > 0 and cost[b][a] > 0]
    return NonUnanimityGraph.from_edges(m, edges)


def max_range(profile: Profile) -> int:
    best = 1
    for c in range(profile.m):
        ps = [pos[c] for pos in profile.positions]
        best = max(best, max(ps) - min(ps) + 1)
    return best


def avg_kt_distance(profile: Profile) -> Fraction:
    """Mean KT distance over ordered pairs of distinct votes (0 for one vote).

    A candidate pair split ``x`` to ``n - x`` between the voters contributes
    ``2 x (n - x)`` disagreeing ordered vote pairs.
    """
    n = profile.n
    if n < 2:
        return Fraction(0)
    cost = profile.costs
    total = sum(2 * cost[a][b] * cost[b][a] for a, b in combinations(range(profile.m), 2))
    return Fraction(total, n * (n - 1))


def consensus_distance(profile: Profile) -> int:
    return len(non_unanimity_graph(profile).edges)


def _max_bipartite_matching(m: int, succ: list) -> int:
    match_right = [-1] * m

    def augment(u, seen):
        for v in succ[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_right[v] < 0 or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    return sum(1 for u in range(m) if augment(u, set()))


def max_antichain_size(order: UnanimityOrder) -> int:
    """Width of a strict partial order via Dilworth's theorem.

    The minimum chain cover has ``m - |M|`` chains where ``M`` is a maximum
    matching in the split graph ``u -> v`` for ``(u, v)`` in the (transitive)
    order.
    """
    m = order.m
    succ = [[v for v in range(m) if order.below[u] >> v & 1] for u in range(m)]
    return m - _max_bipartite_matching(m, succ)


def blocking_size(profile: Profile) -> int:
    """Largest clique of the non-unanimity graph.

    The graph is the incomparability graph of the unanimity order, so its
    cliques are exactly the antichains of that order.
    """
    return max_antichain_size(unanimity_order(profile))


def max_clique_exhaustive(graph: NonUnanimityGraph) -> int:
    """Largest clique by trying vertex subsets, largest first. Test oracle."""
    m = graph.m
    if m == 0:
        return 0
    for size in range(m, 0, -1):
        for subset in combinations(range(m), size):
            if all(graph.has_edge(a, b) for a, b in combinations(subset, 2)):
                return size
    return 0


def _boundary_size(mask: int, adj, m: int) -> int:
    """Vertices in ``mask`` with a neighbour outside ``mask``."""
    outside = ~mask
    return sum(1 for v in range(m) if mask >> v & 1 and adj[v] & outside)


def vertex_separation(graph: NonUnanimityGraph, allowed=None, limit=DEFAULT_PATHWIDTH_LIMIT):
    """Minimum vertex separation over vertex orderings, with a witness.

    ``allowed(mask, v)`` may forbid appending ``v`` to the placed set ``mask``;
    only orderings built from allowed steps are considered. Returns
    ``(width, ordering)``.
    """
    m = graph.m
    if m > limit:
        raise BudgetExceededError("exact vertex separation", m, limit)
    adj = graph.adj
    full = (1 << m) - 1
    # best[mask] = minimum over valid orderings of mask of the worst boundary
    best = {0: 0}
    parent = {}
    frontier = [0]
    for _ in range(m):
        nxt = {}
        for mask in frontier:
            base = best[mask]
            for v in range(m):
                if mask >> v & 1:
                    continue
                if allowed is not None and not allowed(mask, v):
                    continue
                new = mask | 1 << v
                cost = max(base, _boundary_size(new, adj, m))
                if new not in nxt or cost < nxt[new][0]:
                    nxt[new] = (cost, mask, v)
        for new, (cost, mask, v) in nxt.items():
            best[new] = cost
            parent[new] = (mask, v)
        frontier = sorted(nxt)
    if full not in best:
        raise ValueError("no ordering satisfies the constraints")
    ordering = []
    mask = full
    while mask:
        mask, v = parent[mask]
        ordering.append(v)
    ordering.reverse()
    return best[full], ordering


def pathwidth(graph: NonUnanimityGraph, limit=DEFAULT_PATHWIDTH_LIMIT):
    """Exact pathwidth (= vertex separation number) and an optimal ordering."""
    return vertex_separation(graph, limit=limit)


def unanimity_width(profile: Profile, limit=DEFAULT_PATHWIDTH_LIMIT) -> int:
    return pathwidth(non_unanimity_graph(profile), limit=limit)[0]


@dataclass(frozen=True)
class ParameterReport:
    max_range: int
    avg_kt: Fraction
    unanimity_width: int
    blocking_size: int
    consensus_distance: int

    @property
    def avg_kt_decimal(self) -> str:
        return f"{float(self.avg_kt):.3f}"

    def violations(self) -> list:
        """Names of the parameter inequalities this report breaks."""
        checks = {
            "blocking_size - 1 <= unanimity_width": self.blocking_size - 1 <= self.unanimity_width,
            "unanimity_width <= consensus_distance": self.unanimity_width <= self.consensus_distance,
            "blocking_size - 1 <= consensus_distance": self.blocking_size - 1 <= self.consensus_distance,
            "avg_kt <= consensus_distance": self.avg_kt <= self.consensus_distance,
            "max_range - 1 <= consensus_distance": self.max_range - 1 <= self.consensus_distance,
            "unanimity_width <= 2 * max_range": self.unanimity_width <= 2 * self.max_range,
        }
        return [name for name, ok in checks.items() if not ok]


def parameter_report(profile: Profile, limit=DEFAULT_PATHWIDTH_LIMIT) -> ParameterReport:
    return ParameterReport(
        max_range=max_range(profile),
        avg_kt=avg_kt_distance(profile),
        unanimity_width=unanimity_width(profile, limit=limit),
        blocking_size=blocking_size(profile),
        consensus_distance=consensus_distance(profile),
    )
