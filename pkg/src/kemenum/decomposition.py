"""Nice path decompositions of the non-unanimity graph that respect the unanimity order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import UnanimityOrder
from .parameters import DEFAULT_PATHWIDTH_LIMIT, NonUnanimityGraph, vertex_separation

INTRODUCE = "introduce"
FORGET = "forget"


@dataclass(frozen=True)
class NicePathDecomposition:
    """A sequence of ``2m`` introduce/forget events.

    ``bags[i]`` is the bag after event ``i`` (0-based here; bag ``i`` of the
    usual 1-based numbering is ``bags[i - 1]``).
    """

    m: int
    events: tuple  # ((kind, candidate), ...)

    @cached_property
    def bags(self) -> tuple:
        bag = set()
        out = []
        for kind, c in self.events:
            if kind == INTRODUCE:
                bag.add(c)
            else:
                bag.discard(c)
            out.append(frozenset(bag))
        return tuple(out)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1 if self.m else 0

    @cached_property
    def forgotten(self) -> tuple:
        """``forgotten[i]``: candidates forgotten up to and including event ``i``."""
        seen = set()
        out = []
        for kind, c in self.events:
            if kind == FORGET:
                seen.add(c)
            out.append(frozenset(seen))
        return tuple(out)


def decomposition_from_ordering(graph: NonUnanimityGraph, ordering) -> NicePathDecomposition:
    """Introduce vertices in ``ordering``; forget each as soon as all its neighbours are in."""
    introduced = 0
    forgotten = 0
    events = []
    for v in ordering:
        events.append((INTRODUCE, v))
        introduced |= 1 << v
        for u in ordering:
            if introduced >> u & 1 and not forgotten >> u & 1 and graph.adj[u] & ~introduced == 0:
                events.append((FORGET, u))
                forgotten |= 1 << u
    return NicePathDecomposition(graph.m, tuple(events))


def build_decomposition(order: UnanimityOrder, graph: NonUnanimityGraph,
                        limit=DEFAULT_PATHWIDTH_LIMIT) -> NicePathDecomposition:
    """Narrowest decomposition whose introduction order is a linear extension of ``order``.

    Searching only linear extensions makes the result consistent with the
    order: a vertex forgotten before ``x`` is introduced is not adjacent to
    ``x``, hence comparable to it, and it came first.
    """
    above = order.above

    def allowed(mask, v):
        return above[v] & ~mask == 0

    _, ordering = vertex_separation(graph, allowed=allowed, limit=limit)
    return decomposition_from_ordering(graph, ordering)


def validate_decomposition(d: NicePathDecomposition, order: UnanimityOrder,
                           graph: NonUnanimityGraph) -> bool:
    m = graph.m
    if d.m != m or len(d.events) != 2 * m:
        return False
    introduced_at = {}
    forgotten_at = {}
    for i, (kind, c) in enumerate(d.events):
        if not 0 <= c < m:
            return False
        if kind == INTRODUCE:
            if c in introduced_at:
                return False
            introduced_at[c] = i
        elif kind == FORGET:
            if c in forgotten_at or c not in introduced_at:
                return False
            forgotten_at[c] = i
        else:
            return False
    if len(introduced_at) != m or len(forgotten_at) != m:
        return False
    # Every vertex occupies the contiguous run of bags [introduce, forget), so
    # the bag-intersection axiom holds; edges need overlapping runs.
    for a, b in graph.edges:
        if not (introduced_at[a] < forgotten_at[b] and introduced_at[b] < forgotten_at[a]):
            return False
    for u in range(m):
        for x in range(m):
            if u != x and forgotten_at[u] < introduced_at[x] and (u, x) not in order:
                return False
    return True
