"""Mallows sampling by repeated insertion.

The i-th candidate of the central ranking (1-based) is inserted into the
current prefix at slot ``j`` in ``1..i`` with probability proportional to
``phi ** (i - j)``, where ``phi = exp(-theta)``; inserting at slot ``j``
creates ``i - j`` inversions. The product of these factors is
``phi ** kt_distance(result, central)``, the Mallows mass.

Every sample draws from its own stream, keyed by ``(seed, index)``, so a
sample never depends on which other samples were drawn or in what order.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import Profile, check_ranking, kt_distance


@dataclass(frozen=True)
class MallowsConfig:
    central: tuple
    theta: float
    seed: int = 0

    def __post_init__(self):
        if not self.theta > 0:
            raise ValueError("theta must be positive")
        object.__setattr__(self, "central", check_ranking(self.central, len(self.central)))
        object.__setattr__(self, "theta", float(self.theta))
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")

    @classmethod
    def identity(cls, m: int, theta: float, seed: int = 0) -> "MallowsConfig":
        return cls(tuple(range(m)), theta, seed)


def stream(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def insertion_probabilities(i: int, theta: float) -> np.ndarray:
    """Slot probabilities for the i-th insertion; entry ``j - 1`` is slot ``j``."""
    phi = math.exp(-theta)
    weights = phi ** np.arange(i - 1, -1, -1, dtype=float)
    return weights / weights.sum()


@lru_cache(maxsize=64)
def _cdfs(m: int, theta: float) -> tuple:
    return tuple(tuple(np.cumsum(insertion_probabilities(i, theta)).tolist()) for i in range(1, m + 1))


def sample_ranking(cfg: MallowsConfig, index: int) -> tuple:
    m = len(cfg.central)
    if m == 0:
        return ()
    u = stream(cfg.seed, index).random(m).tolist()
    out = []
    for i, (c, cdf) in enumerate(zip(cfg.central, _cdfs(m, cfg.theta))):
        out.insert(min(bisect.bisect_right(cdf, u[i]), i), c)
    return tuple(out)


def sample_profile(cfg: MallowsConfig, n: int) -> Profile:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Profile(len(cfg.central), tuple(sample_ranking(cfg, i) for i in range(n)))


def mallows_pmf(ranking, central, theta: float, normalizer=None) -> float:
    """Exact Mallows probability of ``ranking``.

    The normalizer factorizes as ``prod_{i=1..m} (1 + phi + ... + phi^(i-1))``.
    """
    phi = math.exp(-theta)
    if normalizer is None:
        normalizer = math.prod(sum(phi**j for j in range(i)) for i in range(1, len(central) + 1))
    return phi ** kt_distance(ranking, central) / normalizer
