"""Sparse nonnegative tensors and the multilinear primitives built on them.

A tensor of order m and dimension n is stored as a map from 1-based index
tuples (i1, ..., im) to strictly positive values; absent tuples are zero.
Vectors are plain numpy arrays of length n, with position i-1 holding the
component for index i.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, TensorFormatError
from .kernels import contract_coo


@dataclass(frozen=True)
class Eigenpair:
    """An eigenvalue with its (sum-normalized, when positive) eigenvector."""

    value: float
    vector: np.ndarray
    residual: float


class NonnegativeTensor:
    """Immutable order-m, dimension-n nonnegative tensor in coordinate form.

    `entries` may be a mapping or an iterable of ((i1,...,im), value) pairs.
    Zero values are dropped; negative values, malformed tuples, and
    duplicate tuples are rejected.
    """

    __slots__ = ("order", "dim", "entries", "_rows", "_trail", "_vals")

    def __init__(self, order, dim, entries=()):
        if not isinstance(order, int) or order < 2:
            raise TensorFormatError(f"order must be an integer >= 2, got {order!r}")
        if not isinstance(dim, int) or dim < 1:
            raise TensorFormatError(f"dimension must be an integer >= 1, got {dim!r}")
        clean = {}
        pairs = entries.items() if hasattr(entries, "items") else entries
        for key, value in pairs:
            key = tuple(key)
            if len(key) != order:
                raise TensorFormatError(f"index tuple {key} has {len(key)} components, expected {order}")
            for i in key:
                if not isinstance(i, (int, np.integer)) or not (1 <= i <= dim):
                    raise TensorFormatError(f"index {i!r} out of range 1..{dim} in tuple {key}")
            value = float(value)
            if math.isnan(value) or math.isinf(value):
                raise TensorFormatError(f"non-finite value {value} at {key}")
            if value < 0:
                raise TensorFormatError(f"negative value {value} at {key}")
            key = tuple(int(i) for i in key)
            if key in clean:
                raise TensorFormatError(f"duplicate index tuple {key}")
            clean[key] = value  # zeros kept here so duplicates of zeros still error
        clean = {k: v for k, v in clean.items() if v > 0}
        self.order = order
        self.dim = dim
        self.entries = clean
        self._rows = None
        self._trail = None
        self._vals = None

    # -- coordinate arrays (zero-based, cached) ------------------------------

    def _coo(self):
        if self._vals is None:
            nnz = len(self.entries)
            rows = np.empty(nnz, dtype=np.int64)
            trail = np.empty((nnz, self.order - 1), dtype=np.int64)
            vals = np.empty(nnz, dtype=np.float64)
            for e, (key, value) in enumerate(sorted(self.entries.items())):
                rows[e] = key[0] - 1
                for k in range(1, self.order):
                    trail[e, k - 1] = key[k] - 1
                vals[e] = value
            self._rows, self._trail, self._vals = rows, trail, vals
        return self._rows, self._trail, self._vals

    # -- primitives -----------------------------------------------------------

    def _check_vector(self, x):
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.dim,):
            raise DimensionMismatchError(
                f"vector of shape {x.shape} against tensor of dimension {self.dim}"
            )
        return x

    def contract(self, x):
        """(T x^{m-1})_i = sum over row-i entries of value * prod of x at trailing indices."""
        x = self._check_vector(x)
        rows, trail, vals = self._coo()
        return contract_coo(rows, trail, vals, x, self.dim)

    def f_map(self, x):
        """Componentwise (m-1)-th root of the contraction."""
        y = self.contract(x)
        return y ** (1.0 / (self.order - 1))

    def residual(self, value, x):
        """2-norm of T x^{m-1} - value * x^{[m-1]}."""
        x = self._check_vector(x)
        return float(np.linalg.norm(self.contract(x) - value * x ** (self.order - 1)))

    def induced(self, indices):
        """Sub-tensor keeping entries with all indices in `indices`.

        Returns (sub_tensor, index_map) where index_map[p] is the original
        index that position p+1 of the sub-tensor refers to.
        """
        index_map = tuple(sorted(set(indices)))
        if not index_map:
            raise TensorFormatError("induced tensor requires a nonempty index set")
        for i in index_map:
            if not (1 <= i <= self.dim):
                raise TensorFormatError(f"index {i} out of range 1..{self.dim}")
        keep = set(index_map)
        renum = {old: new + 1 for new, old in enumerate(index_map)}
        entries = {
            tuple(renum[i] for i in key): value
            for key, value in self.entries.items()
            if keep.issuperset(key)
        }
        return NonnegativeTensor(self.order, len(index_map), entries), index_map

    def add_identity(self):
        """T + E: add 1 to every diagonal entry T_{ii...i}."""
        entries = dict(self.entries)
        for i in range(1, self.dim + 1):
            key = (i,) * self.order
            entries[key] = entries.get(key, 0.0) + 1.0
        return NonnegativeTensor(self.order, self.dim, entries)

    def scale(self, c):
        """c * T for c >= 0."""
        if c < 0:
            raise TensorFormatError(f"scale factor must be nonnegative, got {c}")
        return NonnegativeTensor(
            self.order, self.dim, {k: c * v for k, v in self.entries.items()}
        )

    def permute(self, perm):
        """Apply the same permutation of 1..n to all m index positions.

        perm maps old index -> new index.
        """
        return NonnegativeTensor(
            self.order,
            self.dim,
            {tuple(perm[i] for i in key): v for key, v in self.entries.items()},
        )

    def is_symmetric(self):
        """True iff every entry equals the entry at every permutation of its tuple."""
        seen = set()
        for key, value in self.entries.items():
            base = tuple(sorted(key))
            if base in seen:
                continue
            seen.add(base)
            for perm in _distinct_permutations(base):
                if self.entries.get(perm, 0.0) != value:
                    return False
        return True

    # -- plumbing --------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, NonnegativeTensor)
            and self.order == other.order
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.order, self.dim, frozenset(self.entries.items())))

    def __repr__(self):
        return f"NonnegativeTensor(order={self.order}, dim={self.dim}, nnz={len(self.entries)})"

    def __setattr__(self, name, value):
        if hasattr(self, "entries") and name in ("order", "dim", "entries"):
            raise AttributeError("NonnegativeTensor is immutable")
        object.__setattr__(self, name, value)


def identity_tensor(order, dim):
    """The identity tensor E: diagonal entries 1, all others 0."""
    return NonnegativeTensor(order, dim, {(i,) * order: 1.0 for i in range(1, dim + 1)})


def _distinct_permutations(items):
    from itertools import permutations

    return set(permutations(items))
