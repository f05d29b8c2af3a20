"""Exhaustive enumeration over all m! rankings. Used as the reference oracle."""

from __future__ import annotations

from itertools import permutations

from ..core import Scored, kemeny_score_from_costs, respects_unanimity, unanimity_order
from ..errors import BudgetExceededError
from .modes import Approx, Budget, Opt

BRUTE_LIMIT = 8


def all_scored(profile, limit=BRUTE_LIMIT) -> list:
    """Every ranking with its score, sorted by (score, ranking)."""
    if profile.m > limit:
        raise BudgetExceededError("brute-force enumeration", profile.m, limit)
    cost = profile.costs
    # permutations() yields lexicographic order, and sort() is stable
    out = [Scored(q, kemeny_score_from_costs(cost, q)) for q in permutations(range(profile.m))]
    out.sort(key=lambda e: e.score)
    return out


def solve_brute(profile, mode, r, limit=BRUTE_LIMIT) -> list:
    scored = all_scored(profile, limit)
    k_opt = scored[0].score
    if isinstance(mode, Opt):
        keep = [e for e in scored if e.score == k_opt]
    else:
        limit_score = mode.k if isinstance(mode, Budget) else mode.budget(k_opt)
        order = unanimity_order(profile)
        keep = [e for e in scored if e.score <= limit_score and respects_unanimity(e.ranking, order)]
    if not isinstance(mode, (Opt, Budget, Approx)):
        raise TypeError(f"unknown mode {mode!r}")
    return keep[:r]
