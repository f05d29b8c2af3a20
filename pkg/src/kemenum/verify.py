"""Randomized self-check: every solver against brute force, plus profile invariants."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Profile, kemeny_score
from .mallows import MallowsConfig, sample_profile
from .parameters import parameter_report
from .solvers import ALGORITHMS, Approx, Budget, Opt, solve, solve_brute

SOLVERS = {name: (lambda name: lambda p, mode, r: solve(p, mode, r, name))(name) for name in ALGORITHMS[1:]}

OPT_RS = (1, 3, 10)
BUDGET_DELTAS = (0, 1, 2)
LAMBDAS = (1, 1.5, 2)
MALLOWS_THETAS = (1, 2, 4)


@dataclass
class VerifyReport:
    trials: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def random_profile(rng: random.Random, m_range, n_range, mallows: bool) -> Profile:
    m = rng.randint(*m_range)
    n = rng.randint(*n_range)
    if mallows:
        theta = rng.choice(MALLOWS_THETAS)
        central = list(range(m))
        rng.shuffle(central)
        return sample_profile(MallowsConfig(tuple(central), theta, rng.getrandbits(63)), n)
    votes = []
    for _ in range(n):
        v = list(range(m))
        rng.shuffle(v)
        votes.append(tuple(v))
    return Profile(m, tuple(votes))


def mode_grid(k_opt: int):
    for r in OPT_RS:
        yield Opt(), r
    for delta in BUDGET_DELTAS:
        yield Budget(k_opt + delta), 10
    for lam in LAMBDAS:
        yield Approx(lam), 10


def check_profile(profile: Profile, solvers=None, report=None) -> list:
    """Compare every solver with brute force on the full mode grid; return failure notes."""
    solvers = SOLVERS if solvers is None else solvers
    problems = []
    k_opt = solve_brute(profile, Opt(), 1)[0].score
    for mode, r in mode_grid(k_opt):
        expected = solve_brute(profile, mode, r)
        for name, fn in solvers.items():
            got = fn(profile, mode, r)
            if report is not None:
                report.checks += 1
            if got != expected:
                problems.append(f"{name} {mode} r={r}: expected {expected}, got {got}")
            elif any(kemeny_score(profile, e.ranking) != e.score for e in got):
                problems.append(f"{name} {mode} r={r}: reported score differs from recomputed score")
    bad = parameter_report(profile).violations()
    if report is not None:
        report.checks += 1
    if bad:
        problems.append(f"parameter inequalities violated: {', '.join(bad)}")
    return problems


def run_verification(m_max=5, n_max=6, trials=200, seed=0, solvers=None, m_min=3) -> VerifyReport:
    if not 1 <= m_max <= 8:
        raise ValueError("m-max must be between 1 and 8")
    rng = random.Random(seed)
    report = VerifyReport()
    for t in range(trials):
        profile = random_profile(rng, (min(m_min, m_max), m_max), (min(2, n_max), n_max), mallows=t % 2 == 1)
        report.trials += 1
        problems = check_profile(profile, solvers, report)
        if problems:
            report.failures.append((profile, problems))
            break
    return report
