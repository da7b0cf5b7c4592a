"""Spectral radius of a general nonnegative tensor.

Partition into weakly irreducible blocks, solve each block with the
bracketed power method, take the maximum, and attempt to assemble a
zero-padded eigenvector from the maximizing block.  The assembled vector
is returned only when its residual against the full tensor certifies it.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonConvergenceError, SpectralNonConvergenceError
from .hopm import HopmConfig, hopm_run
from .partition import BlockPartition, weak_partition
from .tensor import NonnegativeTensor


@dataclass(frozen=True)
class BlockResult:
    indices: tuple
    value: float
    vector: np.ndarray
    iterations: int
    residual: float
    trace: tuple


@dataclass
class SpectralReport:
    rho: float
    partition: BlockPartition
    block_results: tuple
    argmax_block: int
    total_iterations: int
    assembled_vector: np.ndarray | None = None
    assembled_residual: float | None = None


def spectral_radius(T: NonnegativeTensor, cfg: HopmConfig | None = None) -> SpectralReport:
    """rho(T) = max over weakly irreducible blocks of the block spectral radius."""
    cfg = cfg or HopmConfig()
    part = weak_partition(T)
    results = []
    for indices, sub in zip(part.blocks, part.induced):
        try:
            pair, trace = hopm_run(sub, cfg)
        except NonConvergenceError as err:
            raise SpectralNonConvergenceError(
                f"block {indices} failed to converge: {err}",
                failing_block=indices,
                partial_results=tuple(results),
                lower=err.lower, upper=err.upper, trace=err.trace,
            ) from err
        results.append(
            BlockResult(indices, pair.value, pair.vector, len(trace), pair.residual,
                        tuple(trace))
        )
    rho = max(r.value for r in results)
    argmax = next(i for i, r in enumerate(results) if r.value == rho)
    report = SpectralReport(
        rho=rho,
        partition=part,
        block_results=tuple(results),
        argmax_block=argmax,
        total_iterations=sum(r.iterations for r in results),
    )
    vec = assemble_eigenvector(T, report, certify_tol=100.0 * cfg.tolerance)
    if vec is not None:
        report.assembled_vector = vec
        report.assembled_residual = T.residual(rho, vec)
    return report


def assemble_eigenvector(T: NonnegativeTensor, report: SpectralReport,
                         certify_tol: float = 1e-4):
    """Zero-pad the maximizing block's eigenvector to length n, if it certifies.

    Returns the padded vector only when residual(T, rho, padded) stays
    within `certify_tol`; None otherwise.  Guaranteed to certify for
    symmetric tensors; attempted-and-verified for everything else.
    """
    best = report.block_results[report.argmax_block]
    padded = np.zeros(T.dim)
    padded[[i - 1 for i in best.indices]] = best.vector
    if T.residual(report.rho, padded) <= certify_tol:
        return padded
    return None
