"""Block partitions of nonnegative tensors.

Two kinds are produced, both with a block-triangular ordering guarantee:

* weak: recursively split along the strongly connected components of the
  representation matrix until every induced tensor has an irreducible
  representation matrix of its own;
* strong: recursively split along reducibility witnesses (proper closed
  support sets) until every induced tensor is irreducible.

Blocks are reported in original 1-based indices; cross-block coupling at
the level that defined each split only points from earlier blocks to later
ones.
"""

import heapq
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .analysis import find_closed_set, representation
from .tensor import NonnegativeTensor


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple          # tuple of sorted index tuples (1-based, original)
    induced: tuple         # induced NonnegativeTensor per block
    kind: str              # "weak" | "strong"


def matrix_blocks(M: np.ndarray):
    """Strongly connected components of M's support digraph, topologically ordered.

    All cross-component arcs point from earlier blocks to later blocks.
    Ties among admissible next components go to the one containing the
    smallest index.  Indices are 1-based.
    """
    n = M.shape[0]
    if n == 1:
        return [(1,)]
    graph = csr_matrix(M > 0)
    count, labels = connected_components(graph, directed=True, connection="strong")
    members = [[] for _ in range(count)]
    for i, lab in enumerate(labels):
        members[lab].append(i + 1)
    # condensation DAG: arc a -> b when some M[i, j] > 0 crosses components
    succs = [set() for _ in range(count)]
    indeg = [0] * count
    for i, j in zip(*np.nonzero(M > 0)):
        a, b = labels[i], labels[j]
        if a != b and b not in succs[a]:
            succs[a].add(b)
            indeg[b] += 1
    heap = [(members[c][0], c) for c in range(count) if indeg[c] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, c = heapq.heappop(heap)
        order.append(tuple(members[c]))
        for b in succs[c]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (members[b][0], b))
    return order


def weak_partition(T: NonnegativeTensor) -> BlockPartition:
    """Partition into blocks whose induced tensors are weakly irreducible.

    Splitting recurses because an induced tensor drops entries with indices
    leaving the block, so its own representation matrix can split further.
    """
    blocks, induced = [], []

    def recurse(sub, index_map):
        parts = matrix_blocks(representation(sub))
        if len(parts) == 1:
            blocks.append(index_map)
            induced.append(sub)
            return
        for part in parts:
            inner, local_map = sub.induced(part)
            recurse(inner, tuple(index_map[p - 1] for p in local_map))

    recurse(T, tuple(range(1, T.dim + 1)))
    return BlockPartition(tuple(blocks), tuple(induced), "weak")


def strong_partition(T: NonnegativeTensor) -> BlockPartition:
    """Partition into blocks whose induced tensors are irreducible.

    A proper closed support set S (rows outside S have no positive entry
    with all trailing indices inside S) splits the index set into (S,
    complement); entries from the complement into S at this level are all
    zero, giving the block-triangular zero pattern.
    """
    blocks, induced = [], []

    def recurse(sub, index_map):
        closed = find_closed_set(sub)
        if closed is None:
            blocks.append(index_map)
            induced.append(sub)
            return
        rest = set(range(1, sub.dim + 1)) - closed
        for part in (sorted(closed), sorted(rest)):
            inner, local_map = sub.induced(part)
            recurse(inner, tuple(index_map[p - 1] for p in local_map))

    recurse(T, tuple(range(1, T.dim + 1)))
    return BlockPartition(tuple(blocks), tuple(induced), "strong")
