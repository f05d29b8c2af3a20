"""Position-by-position dynamic program inside position windows.

Cell ``(i, c, placed)`` holds the best partial rankings that put ``c`` at
position ``i`` after exactly the window candidates in ``placed`` (and every
candidate whose window closed earlier). Placing ``c`` charges its partial
score: ``cost[c][u]`` for every candidate ``u`` still to come. Since that
charge depends only on the set already placed, keeping the ``r`` best
prefixes per cell is exact.
"""

from __future__ import annotations

from collections import defaultdict

from ..core import Scored, unanimity_order
from .modes import append, flatten_tail_last, merge_top


def top_in_windows(profile, windows, r: int) -> list:
    """First ``r`` unanimity-respecting rankings inside ``windows`` by (score, ranking)."""
    m = profile.m
    cost = profile.costs
    above = unanimity_order(profile).above
    lo, hi = windows.lo, windows.hi
    window = [[c for c in range(m) if lo[c] <= i <= hi[c]] for i in range(m)]
    window_mask = [sum(1 << c for c in w) for w in window]
    closes = [sum(1 << c for c in range(m) if hi[c] <= i) for i in range(m)]
    row_total = [sum(row) for row in cost]

    # cells[(c, placed)] -> sorted [(score, seq)]; placed is a mask inside window i
    cells = {None: [(0, ())]}
    for i in range(m):
        incoming = defaultdict(list)
        for key, entries in cells.items():
            if key is None:
                done = 0
            else:
                c_prev, placed_prev = key
                done = (closes[i - 2] if i >= 2 else 0) | placed_prev | 1 << c_prev
            for c in window[i]:
                if done >> c & 1 or above[c] & ~done:
                    continue
                now = done | 1 << c
                if closes[i] & ~now:
                    continue
                charge = row_total[c] - sum(cost[c][u] for u in range(m) if now >> u & 1)
                incoming[(c, done & window_mask[i])].append((entries, charge, c))
        cells = {key: merge_top(sources, r, append) for key, sources in incoming.items()}
    found = []
    for entries in cells.values():
        found.extend(entries)
    found.sort()
    return [Scored(flatten_tail_last(seq), s) for s, seq in found[:r]]
