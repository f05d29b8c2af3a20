"""Acceptance criteria, one test each, each reporting a single PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly as a
script: ``python3 tests/test_acceptance.py``.
"""

import itertools
import math
import random
import statistics
import time
from fractions import Fraction

import pytest

from kemenum import Approx, Budget, Opt, Profile, kt_distance, parameter_report, solve
from kemenum.experiments import SweepSpec, run_cell, run_sweep, sample_cell
from kemenum.mallows import MallowsConfig, sample_profile, sample_ranking
from kemenum.solvers import window_size_bounds, solve_brute
from kemenum.solvers.windows import AVG_KT, RANGE
from kemenum.verify import check_profile, random_profile

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # script mode
    ACCEPTANCE_LINES = []

TARGET_THETA8_N200 = (1.000, 0.000, 0.000, 1.000, 0.000)
TARGET_THETA15_N200 = (5.200, 4.207, 2.350, 3.300, 14.050)
PARAMS = ("max_range", "avg_kt", "unanimity_width", "blocking_size", "consensus_distance")

# Every profile any criterion generates, for the inequality suite.
SEEN = []


def record(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def oracle_corpus(count=500, seed=2024):
    rng = random.Random(seed)
    return [random_profile(rng, (3, 6), (2, 8), mallows=t % 2 == 1) for t in range(count)]


_corpus = {}


def equivalence_run():
    """Criterion 1's run, shared with the branch-counter criterion."""
    if not _corpus:
        stats = {}
        solvers = {
            "branch": lambda p, mode, r: solve(p, mode, r, "branch", stats=stats),
            **{a: (lambda a: lambda p, mode, r: solve(p, mode, r, a))(a)
               for a in ("subset-dp", "window-d", "window-range", "pathwidth-dp")},
        }
        profiles = oracle_corpus()
        failures = []
        for profile in profiles:
            problems = check_profile(profile, solvers)
            if problems:
                failures.append((profile, problems))
        SEEN.extend(profiles)
        _corpus.update(profiles=profiles, failures=failures, stats=stats)
    return _corpus


def test_criterion_1_oracle_equivalence():
    run = equivalence_run()
    n = len(run["profiles"])
    mallows = sum(1 for i in range(n) if i % 2)
    detail = f"{n} profiles ({n - mallows} uniform, {mallows} Mallows), 9 modes x 5 solvers, " \
             f"{len(run['failures'])} mismatching profiles"
    if run["failures"]:
        detail += f"; first: {run['failures'][0][1][0]}"
    record(1, n >= 500 and not run["failures"], detail)


def test_criterion_2_constructions():
    block = parameter_report(Profile(4, ((0, 1, 2, 3), (2, 3, 0, 1))))
    swap = parameter_report(Profile(4, ((0, 1, 2, 3), (1, 0, 3, 2))))
    reversal = solve(Profile(3, ((0, 1, 2), (2, 1, 0))), Opt(), 10)
    got = (
        (block.consensus_distance, block.blocking_size, block.unanimity_width),
        (swap.consensus_distance, swap.unanimity_width, swap.max_range, swap.avg_kt),
        (len(reversal), sorted({e.score for e in reversal})),
    )
    want = ((4, 2, 2), (2, 1, 2, 2), (6, [3]))
    show = lambda t: "(" + ", ".join(map(str, t)) + ")"
    record(2, got == want, f"block {show(got[0])}, swap {show(got[1])}, vote+reversal {got[2][0]} rankings of score {got[2][1]}")


def test_criterion_3_inequalities():
    rng = random.Random(77)
    fresh = []
    for t in range(10_000):
        m, n = rng.randint(1, 8), rng.randint(1, 10)
        if t % 2:
            theta = rng.choice((0.25, 0.5, 1, 2, 4))
            fresh.append(sample_profile(MallowsConfig.identity(m, theta, t), n))
        else:
            fresh.append(Profile(m, tuple(tuple(rng.sample(range(m), m)) for _ in range(n))))
    pool = fresh + SEEN
    bad = [(p, parameter_report(p).violations()) for p in pool]
    bad = [b for b in bad if b[1]]
    record(3, len(pool) >= 10_000 and not bad, f"{len(pool)} profiles, {len(bad)} with violated inequalities")


def sweep_means(thetas, voters):
    spec = SweepSpec(m=10, voter_counts=voters, thetas=thetas, samples_per_cell=20, seed=0)
    return {(c.theta, c.n): tuple(c.means[p] for p in PARAMS) for c in run_sweep(spec)}


def test_criterion_4_mallows_reproduction():
    thetas = (1.5, 3, 5, 8)
    means = sweep_means(thetas, (200,))
    hi = means[(8.0, 200)]
    lo = means[(1.5, 200)]
    ok8 = all(abs(a - b) <= 0.3 for a, b in zip(hi, TARGET_THETA8_N200))
    ok15 = all(abs(a - b) <= 0.3 * b for a, b in zip(lo, TARGET_THETA15_N200))
    cons = [means[(float(t), 200)][4] for t in thetas]
    avg = [means[(float(t), 200)][1] for t in thetas]
    decreasing = all(a > b for a, b in zip(cons, cons[1:])) and all(a > b for a, b in zip(avg, avg[1:]))
    fmt = lambda xs: "(" + ", ".join(f"{x:.3f}" for x in xs) + ")"
    record(
        4,
        ok8 and ok15 and decreasing,
        f"theta=8 {fmt(hi)} within 0.3: {ok8}; theta=1.5 {fmt(lo)} within 30%: {ok15}; "
        f"consensus {fmt(cons)} and avg_kt {fmt(avg)} strictly decreasing: {decreasing}",
    )


def test_criterion_5_voter_count_stability():
    voters = (10, 25, 50, 100, 200)
    means = sweep_means((1.5,), voters)
    cons = [means[(1.5, n)][4] for n in voters]
    grand = statistics.fmean(cons)
    spread = max(abs(c - grand) for c in cons) / grand
    record(5, spread < 0.25,
           f"consensus means {', '.join(f'{c:.3f}' for c in cons)}; max deviation {spread:.1%} of grand mean {grand:.3f}")


def test_criterion_6_window_size_bounds():
    profiles = [p for i, p in enumerate(equivalence_run()["profiles"]) if i % 2]
    for theta in (1.5, 3, 5, 8):
        for n in (10, 25, 50, 100, 200):
            profiles.extend(sample_cell(10, theta, n, 20, 0))
    SEEN.extend(profiles[len(profiles) - 400:])
    checked = violations = 0
    for p in profiles:
        for source, scale in ((AVG_KT, 1), (RANGE, 1), (AVG_KT, Fraction(3, 2)), (AVG_KT, 2)):
            bound, sizes = window_size_bounds(p, source, scale)
            if bound is None:
                continue
            checked += 1
            violations += max(sizes) > bound
    record(6, violations == 0, f"{len(profiles)} Mallows profiles, {checked} window families checked, {violations} over the bound")


def test_criterion_7_branch_tree_bound():
    runs = equivalence_run()["stats"]["branch_runs"]
    over = [(k, nodes) for k, nodes in runs if nodes > 2 ** (k + 1)]
    worst = max(nodes / 2 ** (k + 1) for k, nodes in runs)
    record(7, runs and not over, f"{len(runs)} budget runs, {len(over)} over 2^(k+1), worst ratio {worst:.3f}")


def test_criterion_8_sampler_distribution():
    samples = 200_000
    worst = 0.0
    for theta in (0.5, 1.5, 3):
        cfg = MallowsConfig.identity(3, theta, seed=8)
        counts = {p: 0 for p in itertools.permutations(range(3))}
        for i in range(samples):
            counts[sample_ranking(cfg, i)] += 1
        weights = {p: math.exp(-theta * kt_distance(p, (0, 1, 2))) for p in counts}
        z = sum(weights.values())
        for p, c in counts.items():
            prob = weights[p] / z
            se = math.sqrt(prob * (1 - prob) / samples)
            worst = max(worst, abs(c / samples - prob) / se)
    record(8, worst <= 3, f"largest deviation {worst:.2f} standard errors over 18 permutation frequencies")


def test_criterion_9_performance():
    rng = random.Random(9)
    uniform = Profile(16, tuple(tuple(rng.sample(range(16), 16)) for _ in range(50)))
    t0 = time.perf_counter()
    a = solve(uniform, Opt(), 10, "subset-dp")
    t1 = time.perf_counter()
    mallows = sample_profile(MallowsConfig.identity(14, 3, 9), 100)
    b = solve(mallows, Opt(), 5, "pathwidth-dp")
    t2 = time.perf_counter()
    ok = len(a) >= 1 and len(b) >= 1 and t1 - t0 < 60 and t2 - t1 < 60
    record(9, ok, f"subset-dp m=16 n=50 r=10 in {t1 - t0:.2f}s; pathwidth-dp m=14 n=100 r=5 in {t2 - t1:.3f}s")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
