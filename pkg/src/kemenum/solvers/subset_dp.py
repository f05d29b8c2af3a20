"""Dynamic program over candidate subsets, parameterized by the number of candidates.

The table cell for a subset ``S`` keeps the best ``min(r, |S|!)`` rankings of
``S`` (votes restricted to ``S``) that extend the unanimity order. A ranking
``c > pi`` of ``S`` costs ``pi``'s score plus ``sum(cost[c][y] for y in S - c)``,
and its (score, ranking) rank among rankings headed by ``c`` equals that of
``pi`` in the cell of ``S - c``, so merging the shifted child lists is exact.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ..core import Scored, unanimity_order
from ..errors import BudgetExceededError
from .modes import flatten_head_first, merge_top, prepend

SUBSET_LIMIT = 20


def head_cost_table(cost, m: int) -> np.ndarray:
    """``table[S, c] = sum(cost[c][y] for y in S)`` for every subset bitmask ``S``."""
    table = np.zeros((1 << m, m), dtype=np.int64)
    into = np.array(cost, dtype=np.int64).T  # into[y, c] = cost[c][y]
    for y in range(m):
        half = 1 << y
        table[half:2 * half] = table[:half] + into[y]
    return table


def top_extensions(profile, r: int, limit=SUBSET_LIMIT) -> list:
    """First ``r`` linear extensions of the unanimity order by (score, ranking)."""
    m = profile.m
    if m > limit:
        raise BudgetExceededError("subset dynamic program", m, limit)
    above = unanimity_order(profile).above
    heads = head_cost_table(profile.costs, m)
    prev = {0: [(0, ())]}
    for size in range(1, m + 1):
        layer = {}
        for members in combinations(range(m), size):
            mask = 0
            for c in members:
                mask |= 1 << c
            row = heads[mask].tolist()
            sources = [(prev[mask ^ 1 << c], row[c], c) for c in members if not above[c] & mask]
            layer[mask] = merge_top(sources, r, prepend)
        prev = layer
    return [Scored(flatten_head_first(seq), s) for s, seq in prev[(1 << m) - 1]]
