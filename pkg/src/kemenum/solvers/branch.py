"""Bounded search tree over pair orientations, parameterized by the score budget.

Starting from the unanimity order, the search fixes the lowest undecided pair
one way or the other and closes the partial order transitively. Every pair
that becomes decided is charged its exact cost, so a leaf's charge is its
Kemeny score. Each branch decides at least one non-unanimous pair (cost >= 1),
hence the tree has depth at most ``k`` and at most ``2^(k+1) - 1`` nodes.
Subtrees are also cut when the charge plus the cheapest orientation of every
undecided pair already exceeds the budget.
"""

from __future__ import annotations

from itertools import combinations

from ..core import Scored, unanimity_order


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def solve_branch(profile, k: int, r: int, stats=None) -> list:
    """Rankings respecting unanimity with score <= ``k``, first ``r`` by (score, ranking)."""
    m = profile.m
    cost = profile.costs
    order = unanimity_order(profile)
    pairs = list(combinations(range(m), 2))
    cheapest = {(a, b): min(cost[a][b], cost[b][a]) for a, b in pairs}
    below0 = list(order.below)
    above0 = list(order.above)
    lower0 = sum(cheapest[p] for p in pairs if not below0[p[0]] >> p[1] & 1 and not below0[p[1]] >> p[0] & 1)
    found = []
    nodes = 0

    def add(below, above, a, b):
        """Add a > b and its transitive consequences; return new state and costs."""
        below = below[:]
        above = above[:]
        charge = 0
        relief = 0
        downs = below[b] | 1 << b
        for u in _bits(above[a] | 1 << a):
            new = downs & ~below[u]
            if not new:
                continue
            below[u] |= new
            for v in _bits(new):
                above[v] |= 1 << u
                charge += cost[u][v]
                relief += cheapest[(u, v) if u < v else (v, u)]
        return below, above, charge, relief

    def search(below, above, start, spent, lower):
        nonlocal nodes
        nodes += 1
        idx = start
        while idx < len(pairs):
            a, b = pairs[idx]
            if not (below[a] >> b & 1 or below[b] >> a & 1):
                break
            idx += 1
        else:
            ranking = tuple(sorted(range(m), key=lambda c: bin(above[c]).count("1")))
            found.append(Scored(ranking, spent))
            return
        a, b = pairs[idx]
        for x, y in ((a, b), (b, a)):
            nb, na, charge, relief = add(below, above, x, y)
            s = spent + charge
            low = lower - relief
            if s + low <= k:
                search(nb, na, idx + 1, s, low)

    if lower0 <= k:
        search(below0, above0, 0, 0, lower0)
    if stats is not None:
        stats.setdefault("branch_runs", []).append((k, nodes))
    found.sort(key=lambda e: (e.score, e.ranking))
    return found[:r]
