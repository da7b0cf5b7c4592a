"""Spectral radius of nonnegative tensors.

Classify a sparse nonnegative tensor's combinatorial structure, partition
it into weakly irreducible blocks, and solve each block with a bracketed
higher-order power method; brute-force oracles verify results at small
scale.
"""

from .analysis import (
    StructureProfile,
    classify,
    is_irreducible,
    majorization,
    matrix_irreducible,
    matrix_primitive,
    representation,
    row_sums,
    support_closure,
    tensor_primitive,
)
from .hopm import (
    BracketBounds,
    HopmConfig,
    TraceRow,
    cw_bounds,
    hilbert_distance,
    hopm_run,
    hopm_step,
)
from .kernels import backend_name
from .partition import BlockPartition, matrix_blocks, strong_partition, weak_partition
from .spectral import BlockResult, SpectralReport, assemble_eigenvector, spectral_radius
from .tensor import Eigenpair, NonnegativeTensor, identity_tensor
from .tensorfile import load_tensor, parse_tensor, render_tensor

__all__ = [
    "BlockPartition",
    "BlockResult",
    "BracketBounds",
    "Eigenpair",
    "HopmConfig",
    "NonnegativeTensor",
    "SpectralReport",
    "StructureProfile",
    "TraceRow",
    "assemble_eigenvector",
    "backend_name",
    "classify",
    "cw_bounds",
    "hilbert_distance",
    "hopm_run",
    "hopm_step",
    "identity_tensor",
    "is_irreducible",
    "load_tensor",
    "majorization",
    "matrix_blocks",
    "matrix_irreducible",
    "matrix_primitive",
    "parse_tensor",
    "render_tensor",
    "representation",
    "row_sums",
    "spectral_radius",
    "strong_partition",
    "support_closure",
    "tensor_primitive",
    "weak_partition",
]

__version__ = "0.1.0"
