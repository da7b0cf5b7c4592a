"""Random-tensor simulation harness.

Each of the n^m positions is nonzero independently with probability
`density`, with values uniform on (0, 1).  The per-trial seed is derived as
seed + trial, so serial and concurrent runs aggregate identically.
"""

import time
from dataclasses import dataclass

import numpy as np

from .hopm import HopmConfig
from .spectral import spectral_radius
from .tensor import NonnegativeTensor


@dataclass(frozen=True)
class SimulationRow:
    n: int
    order: int
    density: float
    trials: int
    mean_rho: float
    percent_weakly_irreducible: float
    mean_iterations: float
    mean_blocks: float
    mean_residual: float
    wall_time: float

    def as_dict(self):
        return {
            "n": self.n,
            "order": self.order,
            "density": self.density,
            "trials": self.trials,
            "mean_rho": self.mean_rho,
            "percent_weakly_irreducible": self.percent_weakly_irreducible,
            "mean_iterations": self.mean_iterations,
            "mean_blocks": self.mean_blocks,
            "mean_residual": self.mean_residual,
            "wall_time": self.wall_time,
        }


def random_tensor(n, order, density, rng) -> NonnegativeTensor:
    """Bernoulli(density) mask over all n^order positions, Uniform(0,1) values."""
    total = n ** order
    mask = rng.random(total) < density
    values = rng.random(total)
    positions = np.nonzero(mask)[0]
    shape = (n,) * order
    entries = {}
    for pos in positions:
        key = tuple(int(i) + 1 for i in np.unravel_index(pos, shape))
        if values[pos] > 0:
            entries[key] = float(values[pos])
    return NonnegativeTensor(order, n, entries)


def run_trial(n, order, density, seed, tolerance=1e-6):
    """One random tensor solved end to end; returns its per-trial statistics."""
    rng = np.random.default_rng(seed)
    T = random_tensor(n, order, density, rng)
    report = spectral_radius(T, HopmConfig(tolerance=tolerance))
    best = report.block_results[report.argmax_block]
    padded = np.zeros(n)
    padded[[i - 1 for i in best.indices]] = best.vector
    return {
        "rho": report.rho,
        "weakly_irreducible": len(report.partition.blocks) == 1,
        "iterations": report.total_iterations,
        "blocks": len(report.partition.blocks),
        "residual": T.residual(report.rho, padded),
    }


def run_simulation(n, order, density, trials, seed=0, tolerance=1e-6) -> SimulationRow:
    if n < 1 or order < 2 or trials < 1:
        raise ValueError("n, order and trials must be positive (order >= 2)")
    if not (0 < density <= 1):
        raise ValueError(f"density must lie in (0, 1], got {density}")
    start = time.perf_counter()
    stats = [run_trial(n, order, density, seed + t, tolerance) for t in range(trials)]
    elapsed = time.perf_counter() - start
    return SimulationRow(
        n=n,
        order=order,
        density=density,
        trials=trials,
        mean_rho=float(np.mean([s["rho"] for s in stats])),
        percent_weakly_irreducible=100.0 * np.mean([s["weakly_irreducible"] for s in stats]),
        mean_iterations=float(np.mean([s["iterations"] for s in stats])),
        mean_blocks=float(np.mean([s["blocks"] for s in stats])),
        mean_residual=float(np.mean([s["residual"] for s in stats])),
        wall_time=elapsed,
    )
