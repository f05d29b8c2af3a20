import itertools
import random

import pytest
from hypothesis import given, strategies as st

from kemenum import (
    Profile,
    kemeny_score,
    kemeny_score_from_costs,
    kt_distance,
    pairwise_costs,
    respects_unanimity,
    unanimity_order,
)
from kemenum.core import UnanimityOrder


def permutations(max_m=7):
    return st.integers(1, max_m).flatmap(lambda m: st.permutations(range(m)))


def perm_pairs(max_m=7):
    return st.integers(1, max_m).flatmap(
        lambda m: st.tuples(st.permutations(range(m)), st.permutations(range(m)))
    )


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((0, 1, 2), (0, 1, 2), 0),
        ((0, 1, 2), (2, 1, 0), 3),
        ((0, 1, 2, 3), (1, 0, 3, 2), 2),
    ],
)
def test_kt_distance_examples(a, b, expected):
    assert kt_distance(a, b) == expected


def test_kt_distance_rejects_mismatched_rankings():
    with pytest.raises(ValueError):
        kt_distance((0, 1), (0, 1, 2))
    with pytest.raises(ValueError):
        kt_distance((0, 1, 2), (0, 1, 3))


def naive_kt(a, b):
    pa = {c: i for i, c in enumerate(a)}
    pb = {c: i for i, c in enumerate(b)}
    return sum((pa[x] - pa[y]) * (pb[x] - pb[y]) < 0 for x, y in itertools.combinations(a, 2))


@given(perm_pairs())
def test_kt_distance_matches_pair_count(pair):
    a, b = pair
    assert kt_distance(a, b) == naive_kt(a, b)
    assert kt_distance(a, b) == kt_distance(b, a)


@given(permutations())
def test_reversal_is_farthest(a):
    m = len(a)
    assert kt_distance(a, a[::-1]) == m * (m - 1) // 2


@given(st.integers(1, 6).flatmap(lambda m: st.tuples(*[st.permutations(range(m))] * 3)))
def test_triangle_inequality(triple):
    a, b, c = triple
    assert kt_distance(a, c) <= kt_distance(a, b) + kt_distance(b, c)


def test_kemeny_score_examples(cyclic, reversal):
    assert kemeny_score(Profile(3, ((2, 0, 1),)), (2, 0, 1)) == 0
    for q in itertools.permutations(range(3)):
        assert kemeny_score(reversal, q) == 3
    assert kemeny_score(cyclic, (0, 1, 2)) == 4


def test_score_from_costs_agrees_with_vote_scan():
    rng = random.Random(11)
    for _ in range(1000):
        m, n = rng.randint(1, 7), rng.randint(1, 9)
        votes = [tuple(rng.sample(range(m), m)) for _ in range(n)]
        profile = Profile(m, tuple(votes))
        q = tuple(rng.sample(range(m), m))
        assert kemeny_score_from_costs(profile.costs, q) == kemeny_score(profile, q)


def test_pairwise_cost_examples(cyclic):
    cost = pairwise_costs(Profile(2, ((0, 1),)))
    assert (cost[0][1], cost[1][0]) == (0, 1)
    cost = pairwise_costs(Profile(2, ((0, 1), (1, 0))))
    assert cost[0][1] == cost[1][0] == 1
    cost = pairwise_costs(cyclic)
    assert (cost[0][1], cost[1][0]) == (1, 2)
    for a, b in itertools.permutations(range(3), 2):
        assert cost[a][b] + cost[b][a] == 3


@given(st.integers(1, 6).flatmap(lambda m: st.lists(st.permutations(range(m)), min_size=1, max_size=8)))
def test_pairwise_costs_sum_to_voter_count(votes):
    profile = Profile(len(votes[0]), tuple(map(tuple, votes)))
    cost = profile.costs
    for a, b in itertools.permutations(range(profile.m), 2):
        assert cost[a][b] + cost[b][a] == profile.n
        assert cost[a][b] == sum(v.index(b) < v.index(a) for v in profile.votes)


def test_profile_validation():
    with pytest.raises(ValueError):
        Profile(3, ((0, 1, 1),))
    with pytest.raises(ValueError):
        Profile(3, ())
    with pytest.raises(ValueError):
        Profile(2, ((0, 1),), names=("a",))
    assert Profile.from_votes([(1, 0), (0, 1)]).n == 2


def test_unanimity_order_examples(unanimous, reversal, block):
    order = unanimity_order(unanimous)
    v = unanimous.votes[0]
    assert set(order.pairs) == set(itertools.combinations(v, 2))
    assert set(unanimity_order(reversal).pairs) == set()
    assert set(unanimity_order(block).pairs) == {(0, 1), (2, 3)}


def test_respects_unanimity(block):
    order = unanimity_order(block)
    assert respects_unanimity((2, 3, 0, 1), order)
    assert not respects_unanimity((1, 0, 2, 3), order)
    assert respects_unanimity((2, 1, 0), UnanimityOrder(3, frozenset()))


@given(st.integers(1, 6).flatmap(lambda m: st.lists(st.permutations(range(m)), min_size=1, max_size=6)))
def test_every_vote_respects_unanimity(votes):
    profile = Profile(len(votes[0]), tuple(map(tuple, votes)))
    order = unanimity_order(profile)
    assert all(respects_unanimity(v, order) for v in profile.votes)
    for a, b in order.pairs:
        assert (b, a) not in order
