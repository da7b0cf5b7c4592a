"""Shared fixture tensors used across the test modules."""

import numpy as np

from specrad import NonnegativeTensor, identity_tensor

# T_111 = T_222 = 1, T_122 = 3, T_211 = 5, T_333 = 4: two weakly irreducible
# blocks {1,2} and {3}; spectral radius 1 + sqrt(15).
BLOCK_DIAG_3 = NonnegativeTensor(
    3, 3, {(1, 1, 1): 1, (1, 2, 2): 3, (2, 1, 1): 5, (2, 2, 2): 1, (3, 3, 3): 4}
)

# The {1,2} block of BLOCK_DIAG_3 on its own.
BLOCK_12 = NonnegativeTensor(3, 2, {(1, 1, 1): 1, (1, 2, 2): 3, (2, 1, 1): 5, (2, 2, 2): 1})
BLOCK_12_RHO = 1.0 + np.sqrt(15.0)
# closed form: x2/x1 = (5/3)^(1/4), sum-normalized
_s = (5.0 / 3.0) ** 0.25
BLOCK_12_VECTOR = np.array([1.0, _s]) / (1.0 + _s)

# Symmetric, weakly irreducible but reducible (T_122 = 0); eigenpair
# (7.3496, (0.5575, 0.4425)).
SYMMETRIC_REDUCIBLE = NonnegativeTensor(
    3, 2, {(1, 1, 1): 1, (1, 1, 2): 4, (1, 2, 1): 4, (2, 1, 1): 4, (2, 2, 2): 1}
)
SYMMETRIC_REDUCIBLE_RHO = 1.0 + 8.0 * 2.0 ** (-1.0 / 3.0)
_r = 2.0 ** (-1.0 / 3.0)
SYMMETRIC_REDUCIBLE_VECTOR = np.array([1.0, _r]) / (1.0 + _r)

# Strictly nonnegative yet weakly reducible: T_122 = T_222 = 1.
STRICT_NOT_WEAKLY_IRRED = NonnegativeTensor(3, 2, {(1, 2, 2): 1, (2, 2, 2): 1})

# Single entry T_122 = 1: nonzero tensor with zero spectral radius.
ZERO_RADIUS = NonnegativeTensor(3, 2, {(1, 2, 2): 1})

# Weakly primitive (G has positive diagonal) but reducible: row 2 vanishes
# toward {1,3}.
WEAKLY_PRIMITIVE_REDUCIBLE = NonnegativeTensor(
    3, 3, {(1, 2, 3): 1, (2, 2, 1): 1, (2, 2, 3): 1, (3, 1, 2): 1, (3, 3, 2): 1}
)

# Cyclic support: weakly irreducible and irreducible but neither weakly
# primitive, primitive, nor weakly positive.
CYCLIC = NonnegativeTensor(3, 3, {(1, 2, 2): 1, (2, 3, 3): 1, (3, 1, 1): 1})

# Weakly positive, hence irreducible, but not weakly primitive.
WEAKLY_POSITIVE_NOT_WP = NonnegativeTensor(3, 2, {(1, 2, 2): 1, (2, 1, 1): 1})

# Weakly positive and weakly primitive but not primitive: the support of
# F_T alternates between e_1 and e_2.
WEAKLY_POSITIVE_NOT_PRIMITIVE = NonnegativeTensor(
    3, 2, {(1, 2, 2): 1, (2, 1, 1): 1, (2, 1, 2): 1, (1, 2, 1): 1}
)

# Weakly positive and primitive, but one diagonal of M(T) is zero, so not
# essentially positive.
PRIMITIVE_NOT_ESSENTIALLY_POSITIVE = NonnegativeTensor(
    3, 2, {(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 1): 1}
)

# Primitive but not weakly positive: M(T) pattern [[1,1,0],[1,1,1],[1,1,1]].
PRIMITIVE_NOT_WEAKLY_POSITIVE = NonnegativeTensor(
    3,
    3,
    {
        (1, 1, 1): 1, (1, 2, 2): 1,
        (2, 1, 1): 1, (2, 2, 2): 1, (2, 3, 3): 1,
        (3, 1, 1): 1, (3, 2, 2): 1, (3, 3, 3): 1,
    },
)

ALL_ONES_32 = NonnegativeTensor(
    3, 2, {(i, j, k): 1.0 for i in (1, 2) for j in (1, 2) for k in (1, 2)}
)

IDENTITY_32 = identity_tensor(3, 2)

# Every named fixture, for sweep-style property tests.
NAMED = {
    "block_diag_3": BLOCK_DIAG_3,
    "block_12": BLOCK_12,
    "symmetric_reducible": SYMMETRIC_REDUCIBLE,
    "strict_not_weakly_irred": STRICT_NOT_WEAKLY_IRRED,
    "zero_radius": ZERO_RADIUS,
    "weakly_primitive_reducible": WEAKLY_PRIMITIVE_REDUCIBLE,
    "cyclic": CYCLIC,
    "weakly_positive_not_wp": WEAKLY_POSITIVE_NOT_WP,
    "weakly_positive_not_primitive": WEAKLY_POSITIVE_NOT_PRIMITIVE,
    "primitive_not_essentially_positive": PRIMITIVE_NOT_ESSENTIALLY_POSITIVE,
    "primitive_not_weakly_positive": PRIMITIVE_NOT_WEAKLY_POSITIVE,
    "all_ones_32": ALL_ONES_32,
    "identity_32": IDENTITY_32,
}
