"""Structure analysis of nonnegative tensors.

Builds the majorization matrix M(T) (entry (i,j) = T_{ij...j}), the
representation matrix G(T) (entry (i,j) = sum of row-i values whose
trailing indices include j), and the row-sum vector R(T), and decides the
seven structural classes: strictly nonnegative, weakly irreducible, weakly
primitive, irreducible, primitive, weakly positive, essentially positive.

Conventions for dimension 1: irreducible and weakly irreducible always;
primitive iff the single entry is positive.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import PrimitivityUndecidedError, SpecradError
from .tensor import NonnegativeTensor


@dataclass(frozen=True)
class StructureProfile:
    strictly_nonnegative: bool
    weakly_irreducible: bool
    weakly_primitive: bool
    irreducible: bool
    primitive: bool
    weakly_positive: bool
    essentially_positive: bool

    def as_dict(self):
        # plain bools so the dict serializes to JSON directly
        return {
            "strictly_nonnegative": bool(self.strictly_nonnegative),
            "weakly_irreducible": bool(self.weakly_irreducible),
            "weakly_primitive": bool(self.weakly_primitive),
            "irreducible": bool(self.irreducible),
            "primitive": bool(self.primitive),
            "weakly_positive": bool(self.weakly_positive),
            "essentially_positive": bool(self.essentially_positive),
        }


def majorization(T: NonnegativeTensor) -> np.ndarray:
    """M(T)[i, j] = T_{i j j ... j} (dense n x n)."""
    n, m = T.dim, T.order
    M = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            M[i - 1, j - 1] = T.entries.get((i,) + (j,) * (m - 1), 0.0)
    return M


def representation(T: NonnegativeTensor) -> np.ndarray:
    """G(T)[i, j] = sum of row-i entry values whose trailing tuple contains j.

    An entry contributes its full value once to every distinct index in its
    trailing tuple.
    """
    n = T.dim
    G = np.zeros((n, n))
    for key, value in T.entries.items():
        i = key[0]
        for j in set(key[1:]):
            G[i - 1, j - 1] += value
    return G


def row_sums(T: NonnegativeTensor) -> np.ndarray:
    """R(T)_i = sum of all entry values in row i; equals T applied to all-ones."""
    return T.contract(np.ones(T.dim))


def support_closure(T: NonnegativeTensor, seed) -> frozenset:
    """Smallest superset of `seed` closed under support propagation.

    Index i joins whenever some entry T_{i i2...im} > 0 has every trailing
    index already in the set.  Fixpoint is reached in at most n-1 rounds.
    """
    current = set(seed)
    if not current:
        raise SpecradError("support closure requires a nonempty seed set")
    # rows[i] = list of trailing-index sets for positive entries in row i
    pending = {}
    for key in T.entries:
        pending.setdefault(key[0], []).append(frozenset(key[1:]))
    changed = True
    while changed:
        changed = False
        for i in list(pending):
            if i in current:
                del pending[i]
                continue
            if any(trail <= current for trail in pending[i]):
                current.add(i)
                del pending[i]
                changed = True
    return frozenset(current)


def _support_step(row_trails, support, n):
    """One boolean application of F_T: rows whose some entry has all trailing in `support`."""
    return frozenset(
        i for i, trails in row_trails.items() if any(t <= support for t in trails)
    )


def _row_trails(T):
    trails = {}
    for key in T.entries:
        trails.setdefault(key[0], []).append(frozenset(key[1:]))
    return trails


def is_irreducible(T: NonnegativeTensor) -> bool:
    """No proper nonempty index set I has all row-I entries vanish outside I.

    Decided via support closures of T+E from every singleton: T is
    irreducible iff each closure is the full index set.
    """
    if T.dim == 1:
        return True
    shifted = T.add_identity()
    full = frozenset(range(1, T.dim + 1))
    return all(support_closure(shifted, {j}) == full for j in range(1, T.dim + 1))


def find_closed_set(T: NonnegativeTensor):
    """First proper closed set found by closures of singletons in increasing order.

    Returns None when T is irreducible.  The complement of a returned set is
    a reducibility witness.
    """
    if T.dim == 1:
        return None
    shifted = T.add_identity()
    full = frozenset(range(1, T.dim + 1))
    for j in range(1, T.dim + 1):
        closed = support_closure(shifted, {j})
        if closed != full:
            return closed
    return None


def matrix_irreducible(M: np.ndarray) -> bool:
    """True iff the support digraph (arc i->j when M[i,j] > 0) is strongly connected."""
    n = M.shape[0]
    if n == 1:
        return True
    graph = csr_matrix(M > 0)
    count, _ = connected_components(graph, directed=True, connection="strong")
    return count == 1


def _bool_matmul(A, B):
    return (A.astype(np.int64) @ B.astype(np.int64)) > 0


def _bool_power(B, k):
    """Zero/nonzero pattern of B^k via repeated boolean squaring (k >= 1)."""
    result = None
    base = B.copy()
    while k:
        if k & 1:
            result = base if result is None else _bool_matmul(result, base)
        k >>= 1
        if k:
            base = _bool_matmul(base, base)
    return result


def matrix_primitive(M: np.ndarray) -> bool:
    """True iff the boolean power of M to n^2 - 2n + 2 is entrywise positive."""
    n = M.shape[0]
    if n == 1:
        return M[0, 0] > 0
    k = n * n - 2 * n + 2
    return bool(np.all(_bool_power(M > 0, k)))


def tensor_primitive(T: NonnegativeTensor, max_states=None) -> bool:
    """Exact primitivity decision.

    A zero row sum rules primitivity out immediately.  Otherwise the full
    support is absorbing under one boolean F_T step, so the support sequence
    started from each singleton either reaches full support or enters a
    cycle.  Fast paths: a primitive M(T) is sufficient and a
    primitive G(T) is necessary.
    """
    n = T.dim
    if not np.all(row_sums(T) > 0):
        return False
    if matrix_primitive(majorization(T)):
        return True
    if not matrix_primitive(representation(T)):
        return False
    cap = max_states if max_states is not None else 2 ** min(n, 20)
    full = frozenset(range(1, n + 1))
    trails = _row_trails(T)
    for j in range(1, n + 1):
        support = frozenset({j})
        seen = {support}
        while support != full:
            support = _support_step(trails, support, n)
            if not support or support in seen:
                return False
            seen.add(support)
            if len(seen) > cap:
                raise PrimitivityUndecidedError(
                    f"more than {cap} support states from start index {j}"
                )
    return True


def classify(T: NonnegativeTensor, max_states=None) -> StructureProfile:
    """All seven class verdicts for T.

    Raises PrimitivityUndecidedError if the primitivity support-state cap
    is exceeded; the other six verdicts are always exact.
    """
    M = majorization(T)
    G = representation(T)
    off_diag = M[~np.eye(T.dim, dtype=bool)]
    return StructureProfile(
        strictly_nonnegative=bool(np.all(row_sums(T) > 0)),
        weakly_irreducible=matrix_irreducible(G),
        weakly_primitive=matrix_primitive(G),
        irreducible=is_irreducible(T),
        primitive=tensor_primitive(T, max_states=max_states),
        weakly_positive=bool(np.all(off_diag > 0)),
        essentially_positive=bool(np.all(M > 0)),
    )
