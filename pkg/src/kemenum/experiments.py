"""Parameter sweep over Mallows dispersion and voter count, emitted as CSV."""

from __future__ import annotations

import hashlib
import statistics
from dataclasses import dataclass, field

from .errors import KemenyError
from .mallows import MallowsConfig, sample_profile
from .parameters import parameter_report

PARAMETERS = ("max_range", "avg_kt", "unanimity_width", "blocking_size", "consensus_distance")

CSV_COLUMNS = (
    ["theta", "n_voters", "m", "samples"]
    + [f"{p}_mean" for p in PARAMETERS]
    + [f"{p}_sd" for p in PARAMETERS]
)


@dataclass(frozen=True)
class SweepSpec:
    m: int = 10
    voter_counts: tuple = (10, 25, 50, 100, 200)
    thetas: tuple = (1.5, 3, 5, 8)
    samples_per_cell: int = 20
    seed: int = 0

    def __post_init__(self):
        if self.m < 1 or self.samples_per_cell < 1:
            raise ValueError("m and samples_per_cell must be positive")
        if any(n < 1 for n in self.voter_counts) or any(not t > 0 for t in self.thetas):
            raise ValueError("voter counts and thetas must be positive")


@dataclass(frozen=True)
class CellResult:
    theta: float
    n: int
    m: int
    samples: int
    means: dict
    sds: dict
    reports: tuple = field(default=(), repr=False)


def theta_key(theta) -> str:
    """Decimal string for theta that does not depend on int/float spelling."""
    return repr(float(theta))


def cell_seed(seed: int, theta, n: int, sample: int) -> int:
    """Stable 64-bit seed for one sampled profile; adding cells never moves others."""
    text = f"{seed}|{theta_key(theta)}|{n}|{sample}".encode()
    return int.from_bytes(hashlib.blake2b(text, digest_size=8).digest(), "little")


def sample_cell(m, theta, n, samples, seed):
    for s in range(samples):
        cfg = MallowsConfig.identity(m, theta, cell_seed(seed, theta, n, s))
        yield sample_profile(cfg, n)


def run_cell(m, theta, n, samples, seed) -> CellResult:
    reports = []
    for profile in sample_cell(m, theta, n, samples, seed):
        try:
            reports.append(parameter_report(profile))
        except KemenyError as exc:
            raise type(exc)(f"cell theta={theta_key(theta)} n={n}: {exc}") from exc
    means, sds = {}, {}
    for p in PARAMETERS:
        values = [float(getattr(rep, p)) for rep in reports]
        means[p] = statistics.fmean(values)
        sds[p] = statistics.pstdev(values)
    return CellResult(float(theta), n, m, samples, means, sds, tuple(reports))


def run_sweep(spec: SweepSpec) -> list:
    return [
        run_cell(spec.m, theta, n, spec.samples_per_cell, spec.seed)
        for theta in spec.thetas
        for n in spec.voter_counts
    ]


def _fmt(x) -> str:
    return f"{x:.3f}"


def emit_csv(results) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for cell in results:
        row = [_fmt(cell.theta), str(cell.n), str(cell.m), str(cell.samples)]
        row += [_fmt(cell.means[p]) for p in PARAMETERS]
        row += [_fmt(cell.sds[p]) for p in PARAMETERS]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
