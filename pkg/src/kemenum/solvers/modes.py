"""Solve modes, request type and helpers shared by every solver."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from ..core import Scored


@dataclass(frozen=True)
class Opt:
    """All optimal rankings."""


@dataclass(frozen=True)
class Budget:
    """Rankings respecting unanimity with score at most ``k``."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget k must be non-negative")


@dataclass(frozen=True)
class Approx:
    """Rankings respecting unanimity with score at most ``lam`` times the optimum."""

    lam: Fraction

    def __post_init__(self):
        lam = self.lam
        if not isinstance(lam, Fraction):
            lam = Fraction(str(lam)) if isinstance(lam, float) else Fraction(lam)
            object.__setattr__(self, "lam", lam)
        if lam < 1:
            raise ValueError("approximation factor must be at least 1")

    def budget(self, k_opt: int) -> int:
        return math.floor(self.lam * k_opt)


ALGORITHMS = ("brute", "branch", "subset-dp", "window-d", "window-range", "pathwidth-dp")


@dataclass(frozen=True)
class SolveRequest:
    profile: object
    r: int = 1
    mode: object = Opt()
    algorithm: str = "subset-dp"

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; choose from {', '.join(ALGORITHMS)}")
        if isinstance(self.mode, Budget):
            p = self.profile
            if self.mode.k > p.n * p.m * (p.m - 1) // 2:
                raise ValueError("budget k exceeds n * C(m, 2)")


def flatten_head_first(seq) -> tuple:
    """``(a, (b, (c, ())))`` -> ``(a, b, c)``."""
    out = []
    while seq:
        head, seq = seq
        out.append(head)
    return tuple(out)


def flatten_tail_last(seq) -> tuple:
    """``((((), a), b), c)`` -> ``(a, b, c)``."""
    out = []
    while seq:
        seq, last = seq
        out.append(last)
    out.reverse()
    return tuple(out)


def merge_top(sources, r: int, extend) -> list:
    """Smallest ``r`` entries among shifted sorted lists.

    ``sources`` holds ``(entries, add, c)`` where ``entries`` is a sorted list
    of ``(score, seq)``; each contributes ``(score + add, extend(seq, c))``.
    Keys are compared as ``(score, seq)``, and nested ``seq`` tuples compare
    like the flat rankings they encode.
    """
    heap = []
    for j, (entries, add, c) in enumerate(sources):
        if entries:
            s, seq = entries[0]
            heap.append((s + add, extend(seq, c), j, 0))
    heapq.heapify(heap)
    out = []
    while heap and len(out) < r:
        score, seq, j, p = heapq.heappop(heap)
        out.append((score, seq))
        entries, add, c = sources[j]
        if p + 1 < len(entries):
            s, nxt = entries[p + 1]
            heapq.heappush(heap, (s + add, extend(nxt, c), j, p + 1))
    return out


def prepend(seq, c):
    return (c, seq)


def append(seq, c):
    return (seq, c)


def finalize(entries, r: int) -> list:
    """Sort ``Scored`` items by (score, ranking) and keep the first ``r``."""
    return sorted(entries, key=lambda e: (e.score, e.ranking))[:r]


def filter_mode(entries, mode, k_opt=None) -> list:
    """Restrict a sorted list of unanimity-respecting ``Scored`` items to ``mode``."""
    if not entries:
        return []
    best = entries[0].score if k_opt is None else k_opt
    if isinstance(mode, Opt):
        limit = best
    elif isinstance(mode, Budget):
        limit = mode.k
    elif isinstance(mode, Approx):
        limit = mode.budget(best)
    else:
        raise TypeError(f"unknown mode {mode!r}")
    return [e for e in entries if e.score <= limit]


__all__ = [
    "ALGORITHMS",
    "Approx",
    "Budget",
    "Opt",
    "Scored",
    "SolveRequest",
    "filter_mode",
    "finalize",
]
