"""Bracketed higher-order power method for weakly irreducible tensors.

Each iteration contracts the tensor against the current positive simplex
vector, reads off the max/min component ratios (which bracket the spectral
radius), takes the componentwise (m-1)-th root, and renormalizes to unit
coordinate sum.  By default the iteration runs on T+E and the bracket is
reduced by 1, which guarantees convergence for every weakly irreducible
input; the estimate at stop is the bracket midpoint.
"""

from dataclasses import dataclass

import numpy as np

from .analysis import matrix_irreducible, representation
from .errors import (
    NonConvergenceError,
    NotWeaklyIrreducibleError,
    SpecradError,
    ZeroIterateError,
)
from .tensor import Eigenpair, NonnegativeTensor

STAGNATION_LIMIT = 50


@dataclass(frozen=True)
class BracketBounds:
    lower: float
    upper: float


@dataclass(frozen=True)
class TraceRow:
    iteration: int
    alpha: float
    beta: float
    width: float
    residual: float


@dataclass
class HopmConfig:
    tolerance: float = 1e-6
    max_iterations: int = 10000
    shift: bool = True
    start: str = "uniform"   # "uniform" | "random"
    seed: int | None = None

    def __post_init__(self):
        if self.tolerance <= 0:
            raise SpecradError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise SpecradError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.start not in ("uniform", "random"):
            raise SpecradError(f"start must be uniform|random, got {self.start!r}")


def cw_bounds(T: NonnegativeTensor, x) -> BracketBounds:
    """Collatz-Wielandt bracket at x: min and max of (Tx^{m-1})_i / x_i^{m-1}."""
    x = np.asarray(x, dtype=np.float64)
    if np.any(x <= 0):
        raise SpecradError("Collatz-Wielandt bounds require a strictly positive vector")
    ratios = T.contract(x) / x ** (T.order - 1)
    return BracketBounds(float(ratios.min()), float(ratios.max()))


def hopm_step(T: NonnegativeTensor, x) -> np.ndarray:
    """One power-method step: contract, root componentwise, sum-normalize."""
    y = T.contract(x)
    r = y ** (1.0 / (T.order - 1))
    s = r.sum()
    if s == 0:
        raise ZeroIterateError("power-method step produced the zero vector")
    return r / s


def _start_vector(n, cfg):
    if cfg.start == "uniform":
        return np.full(n, 1.0 / n)
    rng = np.random.default_rng(cfg.seed)
    while True:
        x = rng.uniform(0.0, 1.0, n)
        if np.all(x > 0):
            return x / x.sum()


def hopm_run(T: NonnegativeTensor, cfg: HopmConfig | None = None):
    """Run the bracketed power method; returns (Eigenpair, trace).

    Requires a weakly irreducible tensor.  One-dimensional tensors return
    their diagonal entry immediately.  Trace rows carry the bracket already
    reduced by the shift, so they bound the spectral radius of T itself.
    """
    cfg = cfg or HopmConfig()
    n, m = T.dim, T.order
    if n == 1:
        lam = T.entries.get((1,) * m, 0.0)
        return Eigenpair(lam, np.ones(1), 0.0), [TraceRow(1, lam, lam, 0.0, 0.0)]
    work = T.add_identity() if cfg.shift else T
    offset = 1.0 if cfg.shift else 0.0
    x = _start_vector(n, cfg)
    trace = []
    prev_width = np.inf
    stagnant = 0
    for k in range(1, cfg.max_iterations + 1):
        y = work.contract(x)
        ratios = y / x ** (m - 1)
        alpha = float(ratios.max()) - offset
        beta = float(ratios.min()) - offset
        width = alpha - beta
        mid = (alpha + beta) / 2.0
        res = T.residual(mid, x)
        trace.append(TraceRow(k, alpha, beta, width, res))
        if width <= cfg.tolerance:
            return Eigenpair(mid, x, res), trace
        if k == 1 and not matrix_irreducible(representation(T)):
            # a collapsed bracket certifies the value for any nonnegative
            # tensor, so the precondition only bites once iteration starts
            raise NotWeaklyIrreducibleError(
                "hopm requires a weakly irreducible tensor; partition it first"
            )
        stagnant = stagnant + 1 if width >= prev_width else 0
        if stagnant >= STAGNATION_LIMIT:
            raise NonConvergenceError(
                f"bracket stagnated for {STAGNATION_LIMIT} iterations at width {width:.3e}",
                lower=beta, upper=alpha, trace=trace,
            )
        prev_width = width
        r = y ** (1.0 / (m - 1))
        s = r.sum()
        if s == 0:
            raise ZeroIterateError("power-method step produced the zero vector")
        x = r / s
    last = trace[-1]
    raise NonConvergenceError(
        f"no convergence within {cfg.max_iterations} iterations (width {last.width:.3e})",
        lower=last.beta, upper=last.alpha, trace=trace,
    )


def hilbert_distance(x, y) -> float:
    """Hilbert projective metric log(max ratio / min ratio) over matching supports.

    Returns +inf when the supports differ (vectors not comparable).
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if np.any(x < 0) or np.any(y < 0):
        raise SpecradError("Hilbert distance is defined for nonnegative vectors")
    sx, sy = x > 0, y > 0
    if not sx.any() or not sy.any():
        raise SpecradError("Hilbert distance is undefined for the zero vector")
    if not np.array_equal(sx, sy):
        return float("inf")
    ratios = y[sx] / x[sx]
    return float(np.log(ratios.max() / ratios.min()))
