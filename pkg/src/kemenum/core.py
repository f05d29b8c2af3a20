"""Candidates, rankings, profiles and the score arithmetic the solvers share.

Candidates are dense integers ``0..m-1``. A ranking is a tuple listing the
candidates from most to least preferred, so ``pos(c)`` is simply the index
of ``c`` in the tuple (the number of candidates preferred to it).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

Ranking = tuple  # tuple[int, ...]


class Scored(NamedTuple):
    ranking: tuple
    score: int


def check_ranking(ranking: Sequence[int], m: int) -> tuple:
    r = tuple(int(c) for c in ranking)
    if len(r) != m or sorted(r) != list(range(m)):
        raise ValueError(f"not a permutation of 0..{m - 1}: {list(ranking)}")
    return r


def inverse(ranking: Sequence[int]) -> list:
    """Position of every candidate: ``inverse(r)[c] == r.index(c)``."""
    pos = [0] * len(ranking)
    for i, c in enumerate(ranking):
        pos[c] = i
    return pos


@dataclass(frozen=True)
class Profile:
    """A multiset of complete rankings over candidates ``0..m-1``.

    Duplicate votes are kept; ``n`` counts them.
    """

    m: int
    votes: tuple
    names: tuple | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("a profile needs at least one candidate")
        votes = tuple(check_ranking(v, self.m) for v in self.votes)
        if not votes:
            raise ValueError("a profile needs at least one vote")
        object.__setattr__(self, "votes", votes)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != self.m:
                raise ValueError(f"expected {self.m} candidate names, got {len(names)}")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_votes(cls, votes, names=None) -> "Profile":
        votes = [tuple(v) for v in votes]
        return cls(len(votes[0]) if votes else 0, tuple(votes), names)

    @property
    def n(self) -> int:
        return len(self.votes)

    @cached_property
    def positions(self) -> tuple:
        """``positions[v][c]`` is the position of candidate ``c`` in vote ``v``."""
        return tuple(tuple(inverse(v)) for v in self.votes)

    @cached_property
    def costs(self) -> tuple:
        """Pairwise cost table; see :func:`pairwise_costs`."""
        m = self.m
        prefer = [[0] * m for _ in range(m)]  # prefer[a][b]: voters with a over b
        for v in self.votes:
            for i, a in enumerate(v):
                row = prefer[a]
                for b in v[i + 1:]:
                    row[b] += 1
        return tuple(tuple(prefer[b][a] for b in range(m)) for a in range(m))

    def label(self, c: int) -> str:
        return self.names[c] if self.names is not None else str(c)


def kt_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of candidate pairs ordered differently by ``a`` and ``b``."""
    if len(a) != len(b):
        raise ValueError(f"rankings have different lengths ({len(a)} and {len(b)})")
    if sorted(a) != sorted(b):
        raise ValueError("rankings are over different candidates")
    pos_b = {c: i for i, c in enumerate(b)}
    seq = [pos_b[c] for c in a]
    inversions = 0
    for i, x in enumerate(seq):
        for y in seq[i + 1:]:
            if y < x:
                inversions += 1
    return inversions


def pairwise_costs(profile: Profile) -> tuple:
    """``cost[a][b]`` = number of voters preferring ``b`` over ``a``.

    Placing ``a`` above ``b`` in a consensus costs exactly ``cost[a][b]``.
    """
    return profile.costs


def kemeny_score(profile: Profile, q: Sequence[int]) -> int:
    """Sum of KT distances from ``q`` to every vote."""
    q = check_ranking(q, profile.m)
    return sum(kt_distance(q, v) for v in profile.votes)


def kemeny_score_from_costs(cost, q: Sequence[int]) -> int:
    total = 0
    for i, a in enumerate(q):
        row = cost[a]
        for b in q[i + 1:]:
            total += row[b]
    return total


@dataclass(frozen=True)
class UnanimityOrder:
    """Pairs ``(a, b)`` such that every voter prefers ``a`` to ``b``.

    ``below[a]`` is a bitmask of every ``b`` with ``(a, b)`` in the order and
    ``above[b]`` the mirror mask.
    """

    m: int
    pairs: frozenset

    @cached_property
    def below(self) -> tuple:
        masks = [0] * self.m
        for a, b in self.pairs:
            masks[a] |= 1 << b
        return tuple(masks)

    @cached_property
    def above(self) -> tuple:
        masks = [0] * self.m
        for a, b in self.pairs:
            masks[b] |= 1 << a
        return tuple(masks)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs or (b, a) in self.pairs


def unanimity_order(profile: Profile) -> UnanimityOrder:
    cost = profile.costs
    m = profile.m
    pairs = frozenset((a, b) for a in range(m) for b in range(m) if a != b and cost[a][b] == 0)
    return UnanimityOrder(m, pairs)


def respects_unanimity(q: Sequence[int], order: UnanimityOrder) -> bool:
    pos = inverse(q)
    return all(pos[a] < pos[b] for a, b in order.pairs)
