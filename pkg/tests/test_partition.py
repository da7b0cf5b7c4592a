import numpy as np

from specrad import (
    HopmConfig,
    is_irreducible,
    matrix_blocks,
    matrix_irreducible,
    representation,
    spectral_radius,
    strong_partition,
    weak_partition,
)
from specrad.simulate import random_tensor

from fixtures import (
    BLOCK_DIAG_3,
    CYCLIC,
    SYMMETRIC_REDUCIBLE,
    WEAKLY_PRIMITIVE_REDUCIBLE,
    ZERO_RADIUS,
)


def test_matrix_blocks_block_diag():
    G = np.array([[1.0, 3.0, 0.0], [5.0, 1.0, 0.0], [0.0, 0.0, 4.0]])
    assert matrix_blocks(G) == [(1, 2), (3,)]


def test_matrix_blocks_forward_arc():
    assert matrix_blocks(np.array([[0.0, 1.0], [0.0, 0.0]])) == [(1,), (2,)]


def test_matrix_blocks_irreducible_single():
    assert matrix_blocks(np.array([[0.0, 1.0], [1.0, 0.0]])) == [(1, 2)]


def test_matrix_blocks_ordering_is_topological():
    rng = np.random.default_rng(47)
    for _ in range(100):
        n = int(rng.integers(2, 20))
        M = (rng.random((n, n)) < 0.15) * rng.random((n, n))
        blocks = matrix_blocks(M)
        flat = [i for b in blocks for i in b]
        assert sorted(flat) == list(range(1, n + 1))
        position = {}
        for p, block in enumerate(blocks):
            for i in block:
                position[i] = p
        # all cross-block arcs point from earlier blocks to later blocks
        for i, j in zip(*np.nonzero(M > 0)):
            assert position[i + 1] <= position[j + 1]


def test_weak_partition_block_diag():
    part = weak_partition(BLOCK_DIAG_3)
    assert part.blocks == ((1, 2), (3,))
    assert part.kind == "weak"


def test_weak_partition_singletons():
    assert weak_partition(ZERO_RADIUS).blocks == ((1,), (2,))


def test_weak_partition_irreducible_single_block():
    assert weak_partition(SYMMETRIC_REDUCIBLE).blocks == ((1, 2),)
    assert weak_partition(CYCLIC).blocks == ((1, 2, 3),)


def test_weak_partition_leaves_are_weakly_irreducible():
    rng = np.random.default_rng(53)
    for _ in range(100):
        T = random_tensor(int(rng.integers(2, 9)), 3, float(rng.uniform(0.03, 0.4)), rng)
        part = weak_partition(T)
        flat = sorted(i for b in part.blocks for i in b)
        assert flat == list(range(1, T.dim + 1))
        for sub in part.induced:
            assert matrix_irreducible(representation(sub))


def test_strong_partition_symmetric_reducible():
    part = strong_partition(SYMMETRIC_REDUCIBLE)
    assert part.blocks == ((2,), (1,))
    assert [sub.entries for sub in part.induced] == [{(1, 1, 1): 1.0}, {(1, 1, 1): 1.0}]


def test_strong_partition_irreducible_single_block():
    assert strong_partition(CYCLIC).blocks == ((1, 2, 3),)


def test_strong_partition_separates_reducible_row():
    part = strong_partition(WEAKLY_PRIMITIVE_REDUCIBLE)
    assert (2,) in part.blocks


def test_strong_partition_leaves_are_irreducible():
    rng = np.random.default_rng(59)
    for _ in range(100):
        T = random_tensor(int(rng.integers(2, 8)), 3, float(rng.uniform(0.05, 0.4)), rng)
        part = strong_partition(T)
        flat = sorted(i for b in part.blocks for i in b)
        assert flat == list(range(1, T.dim + 1))
        for sub in part.induced:
            assert is_irreducible(sub)


def test_strong_partition_zero_pattern():
    # entries from a later block with all trailing indices inside an earlier
    # block must be zero
    rng = np.random.default_rng(61)
    for _ in range(50):
        T = random_tensor(int(rng.integers(2, 8)), 3, float(rng.uniform(0.05, 0.4)), rng)
        part = strong_partition(T)
        position = {}
        for p, block in enumerate(part.blocks):
            for i in block:
                position[i] = p
        for key in T.entries:
            trailing_blocks = {position[i] for i in key[1:]}
            if len(trailing_blocks) == 1:
                (q,) = trailing_blocks
                assert position[key[0]] <= q


def test_matrix_blocks_agrees_with_paper_oracle():
    from specrad.oracle import paper_blocks

    rng = np.random.default_rng(67)
    for _ in range(100):
        n = int(rng.integers(2, 33))
        density = float(rng.choice([0.05, 0.2, 0.5]))
        M = (rng.random((n, n)) < density) * rng.random((n, n))
        assert set(matrix_blocks(M)) == set(paper_blocks(M))


def test_block_radius_dominated_by_whole():
    rng = np.random.default_rng(71)
    cfg = HopmConfig(tolerance=1e-8)
    for _ in range(20):
        T = random_tensor(int(rng.integers(2, 6)), 3, float(rng.uniform(0.2, 0.7)), rng)
        rho = spectral_radius(T, cfg).rho
        for block in weak_partition(T).blocks:
            sub, _ = T.induced(block)
            assert rho >= spectral_radius(sub, cfg).rho - 1e-8
