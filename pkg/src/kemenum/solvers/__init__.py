"""Distinct Kemeny ranking enumeration.

Every solver returns a list of :class:`~kemenum.core.Scored` sorted by score,
ties broken by the candidate sequence, truncated to ``r``. Budget and Approx
modes only return rankings that respect the unanimity order; Opt returns
optimal rankings, all of which respect it anyway.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from ..core import kemeny_score_from_costs
from ..errors import InfeasibleWindowsError
from .branch import solve_branch
from .brute import all_scored, solve_brute
from .modes import ALGORITHMS, Approx, Budget, Opt, SolveRequest, filter_mode
from .pathwidth_dp import top_extensions_pw
from .subset_dp import top_extensions
from .window_dp import top_in_windows
from .windows import AVG_KT, RANGE, PositionWindows, build_windows, window_size_bounds

log = logging.getLogger(__name__)

__all__ = [
    "ALGORITHMS",
    "Approx",
    "Budget",
    "Opt",
    "PositionWindows",
    "SolveRequest",
    "all_scored",
    "build_windows",
    "find_k_opt",
    "window_size_bounds",
    "solve",
    "solve_approx",
    "solve_branch",
    "solve_brute",
    "solve_opt",
    "solve_pathwidth_dp",
    "solve_request",
    "solve_subset_dp",
    "solve_window_dp",
    "top_extensions",
    "top_extensions_pw",
    "top_in_windows",
]


def score_upper_bound(profile) -> int:
    """Score of the best input vote; the optimum can be no larger."""
    cost = profile.costs
    return min(kemeny_score_from_costs(cost, v) for v in profile.votes)


def find_k_opt(budget_solver, profile, escalate=False) -> int:
    """Smallest ``k`` for which ``budget_solver(k, 1)`` finds a ranking.

    Binary search over ``[0, best vote score]`` by default; ``escalate`` tries
    ``k = 0, 1, 2, ...`` in turn instead.
    """
    hi = score_upper_bound(profile)
    if escalate:
        k = 0
        while not budget_solver(k, 1):
            k += 1
        return k
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if budget_solver(mid, 1):
            hi = mid
        else:
            lo = mid + 1
    return lo


def solve_opt(budget_solver, profile, r, escalate=False) -> list:
    k_opt = find_k_opt(budget_solver, profile, escalate)
    return budget_solver(k_opt, r)


def solve_approx(budget_solver, profile, mode: Approx, r, escalate=False) -> list:
    k_opt = find_k_opt(budget_solver, profile, escalate)
    return budget_solver(mode.budget(k_opt), r)


def solve_subset_dp(profile, mode, r) -> list:
    return filter_mode(top_extensions(profile, r), mode)


def solve_pathwidth_dp(profile, mode, r, decomposition=None) -> list:
    return filter_mode(top_extensions_pw(profile, r, decomposition), mode)


def _within(entries, k):
    return [e for e in entries if e.score <= k]


def _window_budget_solver(profile, source, scale=1):
    @lru_cache(maxsize=None)
    def run(lo, hi, r):
        windows = PositionWindows(profile.m, lo, hi, source, ())
        return top_in_windows(profile, windows, r)

    def budget_solver(k, r):
        w = build_windows(profile, source, scale=scale, budget=k)
        return _within(run(w.lo, w.hi, r), k)

    return budget_solver


def solve_window_dp(profile, mode, r, source=AVG_KT, escalate=False) -> list:
    """Window dynamic program with average-distance or range windows."""
    budget_solver = _window_budget_solver(profile, source)
    if isinstance(mode, Opt):
        return solve_opt(budget_solver, profile, r, escalate)
    if isinstance(mode, Budget):
        return budget_solver(mode.k, r)
    k_opt = find_k_opt(budget_solver, profile, escalate)
    scaled = _window_budget_solver(profile, source, scale=mode.lam)
    return scaled(mode.budget(k_opt), r)


def solve(profile, mode=Opt(), r=1, algorithm="subset-dp", stats=None, escalate=False) -> list:
    """Enumerate up to ``r`` distinct rankings meeting ``mode`` with ``algorithm``."""
    request = SolveRequest(profile, r, mode, algorithm)
    return solve_request(request, stats=stats, escalate=escalate)


def solve_request(request: SolveRequest, stats=None, escalate=False) -> list:
    profile, mode, r, algorithm = request.profile, request.mode, request.r, request.algorithm
    if algorithm == "brute":
        return solve_brute(profile, mode, r)
    if algorithm == "branch":
        def budget_solver(k, rr):
            return solve_branch(profile, k, rr, stats)

        if isinstance(mode, Opt):
            return solve_opt(budget_solver, profile, r, escalate)
        if isinstance(mode, Budget):
            return budget_solver(mode.k, r)
        return solve_approx(budget_solver, profile, mode, r, escalate)
    if algorithm == "subset-dp":
        return solve_subset_dp(profile, mode, r)
    if algorithm == "pathwidth-dp":
        return solve_pathwidth_dp(profile, mode, r)
    source = AVG_KT if algorithm == "window-d" else RANGE
    try:
        return solve_window_dp(profile, mode, r, source, escalate)
    except InfeasibleWindowsError as exc:
        log.warning("%s; falling back to the subset dynamic program", exc)
        return solve_subset_dp(profile, mode, r)
