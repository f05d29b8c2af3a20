"""Position windows: for each position, the candidates that may occupy it.

Two bounds are used. A ranking ``q`` with score ``K`` satisfies
``|pos_q(c) - p_avg(c)| <= K / n`` for every candidate, because each vote
contributes at least ``|pos_q(c) - pos_v(c)|`` to ``K``. With ``K <= k_opt <=
(n - 1) d`` this gives the open window of half-width ``d`` (average KT
distance) around the average position; with ``K <= lam * k_opt`` the open
window of half-width ``lam * d``.

Independently of any score, a ranking that respects the unanimity order puts
``c`` within ``[lo(c) - r_max + 1, hi(c) + r_max - 1]``, where ``lo``/``hi``
are its best and worst positions among the votes: any candidate at position
``<= lo(c) - r_max`` in some vote is above ``c`` in every vote.
"""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InfeasibleWindowsError
from ..parameters import avg_kt_distance, max_range

log = logging.getLogger(__name__)

AVG_KT = "avg_kt"
RANGE = "range"


@dataclass(frozen=True)
class PositionWindows:
    m: int
    lo: tuple
    hi: tuple
    source: str
    p_avg: tuple

    @property
    def sets(self) -> list:
        """``sets[i]``: candidates allowed at position ``i``."""
        return [frozenset(c for c in range(self.m) if self.lo[c] <= i <= self.hi[c]) for i in range(self.m)]

    def sizes(self) -> list:
        return [len(s) for s in self.sets]

    def contains(self, ranking) -> bool:
        return all(self.lo[c] <= i <= self.hi[c] for i, c in enumerate(ranking))


def average_positions(profile) -> tuple:
    n = profile.n
    return tuple(Fraction(sum(pos[c] for pos in profile.positions), n) for c in range(profile.m))


def _open_interval(p: Fraction, h: Fraction):
    """Integers ``i`` with ``|i - p| < h``."""
    return math.floor(p - h) + 1, math.ceil(p + h) - 1


def _closed_interval(p: Fraction, h: Fraction):
    return math.ceil(p - h), math.floor(p + h)


def hall_feasible(lo, hi, m: int) -> bool:
    """Can every position get a distinct candidate from its window? (intervals: greedy)"""
    pending = []
    by_lo = sorted(range(m), key=lambda c: lo[c])
    j = 0
    for i in range(m):
        while j < m and lo[by_lo[j]] <= i:
            heapq.heappush(pending, hi[by_lo[j]])
            j += 1
        if not pending:
            return False
        if heapq.heappop(pending) < i:
            return False
    return True


def build_windows(profile, source=AVG_KT, scale=Fraction(1), budget=None) -> PositionWindows:
    """Windows containing every target ranking's positions.

    ``avg_kt``: open half-width ``scale * max(d, 1)``, widened to the closed
    half-width ``budget / n`` when a score budget is given. ``range``: the
    unanimity bound from the module docstring; ``scale`` and ``budget`` are
    ignored.
    """
    m = profile.m
    p_avg = average_positions(profile)
    lo, hi = [], []
    if source == AVG_KT:
        h = Fraction(scale) * max(avg_kt_distance(profile), Fraction(1))
        b = None if budget is None else Fraction(budget, profile.n)
        for p in p_avg:
            a, z = _open_interval(p, h)
            if b is not None:
                a2, z2 = _closed_interval(p, b)
                a, z = min(a, a2), max(z, z2)
            lo.append(max(a, 0))
            hi.append(min(z, m - 1))
    elif source == RANGE:
        r_max = max_range(profile)
        for c in range(m):
            ps = [pos[c] for pos in profile.positions]
            lo.append(max(min(ps) - r_max + 1, 0))
            hi.append(min(max(ps) + r_max - 1, m - 1))
    else:
        raise ValueError(f"unknown window source {source!r}")
    windows = PositionWindows(m, tuple(lo), tuple(hi), source, p_avg)
    if not hall_feasible(windows.lo, windows.hi, m):
        raise InfeasibleWindowsError(f"{source} windows admit no assignment of candidates to positions")
    bound, sizes = window_size_bounds(profile, source, scale)
    if bound is not None and max(sizes) > bound:
        log.warning("window sizes %s exceed the size bound %s", sizes, bound)
    return windows


def window_size_bounds(profile, source=AVG_KT, scale=Fraction(1)):
    """Window sizes before widening, with the size bound they should obey.

    ``avg_kt`` with ``scale == 1``: open half-width ``d``, bound ``4d``.
    ``avg_kt`` with ``scale > 1``: open half-width ``scale * d``, bound
    ``4 * scale * d - 1``. ``range``: the range windows, bound ``6 r_max``.
    The bound is ``None`` when ``d < 1`` for the average-distance windows.
    """
    m = profile.m
    if source == RANGE:
        r_max = max_range(profile)
        lo, hi = [], []
        for c in range(m):
            ps = [pos[c] for pos in profile.positions]
            lo.append(min(ps) - r_max + 1)
            hi.append(max(ps) + r_max - 1)
        sizes = [sum(1 for c in range(m) if lo[c] <= i <= hi[c]) for i in range(m)]
        return 6 * r_max, sizes
    d = avg_kt_distance(profile)
    lam = Fraction(scale)
    h = lam * d
    p_avg = average_positions(profile)
    sizes = [sum(1 for p in p_avg if abs(i - p) < h) for i in range(m)]
    if d < 1:
        return None, sizes
    bound = 4 * d if lam == 1 else 4 * lam * d - 1
    return bound, sizes
