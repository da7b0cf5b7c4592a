"""Brute-force oracles, independent of the main code paths by construction.

Desk-scale verifiers with hard input-size guards: subset enumeration for
(weak) reducibility, the dense matrix-power block algorithm, a simplex-grid
maximin lower bound on the spectral radius, and a plain matrix power
iteration for the order-2 case.  Exceeding a guard raises, never silently
approximates.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .analysis import matrix_irreducible, representation
from .errors import NonConvergenceError, OracleGuardError, SpecradError
from .tensor import NonnegativeTensor


@dataclass(frozen=True)
class OracleVerdict:
    verdict: object        # bool or float
    witness: object = None  # index set or grid point, when applicable
    work: int = 0          # subsets enumerated / grid points evaluated


def reducible_bruteforce(T: NonnegativeTensor) -> OracleVerdict:
    """Enumerate every proper nonempty index set I and test the vanishing pattern.

    Reducible with witness I iff every positive entry with row in I has some
    trailing index inside I.
    """
    n = T.dim
    if n > 16:
        raise OracleGuardError(f"subset enumeration guard: n = {n} > 16")
    work = 0
    indices = range(1, n + 1)
    for size in range(1, n):
        for I in combinations(indices, size):
            work += 1
            iset = set(I)
            if not any(
                key[0] in iset and iset.isdisjoint(key[1:])
                for key in T.entries
            ):
                return OracleVerdict(True, witness=frozenset(I), work=work)
    return OracleVerdict(False, work=work)


def weakly_reducible_bruteforce(T: NonnegativeTensor) -> OracleVerdict:
    """Subset enumeration of matrix reducibility applied to G(T)."""
    n = T.dim
    if n > 16:
        raise OracleGuardError(f"subset enumeration guard: n = {n} > 16")
    G = representation(T)
    work = 0
    indices = range(0, n)
    for size in range(1, n):
        for I in combinations(indices, size):
            work += 1
            outside = [j for j in indices if j not in I]
            if np.all(G[np.ix_(list(I), outside)] == 0):
                return OracleVerdict(True, witness=frozenset(i + 1 for i in I), work=work)
    return OracleVerdict(False, work=work)


def paper_blocks(M: np.ndarray):
    """Dense matrix-power block extraction.

    Forms the positivity pattern of (M+E)^{n-1} by n-2 repeated products,
    groups indices by mutual positivity, and orders groups by ascending
    column fill (ancestor count), ties to the smallest index.  Returns the
    same set of blocks as the component-decomposition path.
    """
    n = M.shape[0]
    if n > 64:
        raise OracleGuardError(f"dense power guard: n = {n} > 64")
    if n == 1:
        return [(1,)]
    base = (M > 0) | np.eye(n, dtype=bool)
    C = base.copy()
    for _ in range(n - 2):
        C = (C.astype(np.int64) @ base.astype(np.int64)) > 0
    mutual = C & C.T
    assigned = [False] * n
    groups = []
    for i in range(n):
        if assigned[i]:
            continue
        member_mask = mutual[i]
        members = tuple(int(j) + 1 for j in np.nonzero(member_mask)[0])
        for j in np.nonzero(member_mask)[0]:
            assigned[j] = True
        groups.append((int(C[:, i].sum()), members[0], members))
    groups.sort()
    return [members for _, _, members in groups]


def cw_grid(T: NonnegativeTensor, resolution: int) -> OracleVerdict:
    """Maximin of the Collatz-Wielandt ratio over an interior simplex lattice.

    A certified lower bound on the spectral radius of a weakly irreducible
    tensor, converging to it as the resolution grows.
    """
    n, m = T.dim, T.order
    if n > 4:
        raise OracleGuardError(f"grid guard: n = {n} > 4")
    if resolution < n:
        raise SpecradError(f"resolution {resolution} admits no interior point for n = {n}")
    if n > 1 and not matrix_irreducible(representation(T)):
        raise SpecradError("grid oracle requires a weakly irreducible tensor")
    best = -np.inf
    best_point = None
    work = 0
    for comp in _compositions(resolution, n):
        x = np.array(comp, dtype=np.float64) / resolution
        ratios = T.contract(x) / x ** (m - 1)
        value = float(ratios.min())
        work += 1
        if value > best:
            best = value
            best_point = x
    return OracleVerdict(best, witness=best_point, work=work)


def _compositions(total, parts):
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def matrix_radius_reference(M: np.ndarray, tol: float = 1e-10,
                            max_iterations: int = 200000) -> float:
    """Spectral radius of a nonnegative matrix by plain shifted power iteration.

    Shares no code with the tensor power method.  Bracket midpoint of the
    Collatz-Wielandt ratios of M+I, minus one.
    """
    M = np.asarray(M, dtype=np.float64)
    n = M.shape[0]
    if M.shape != (n, n) or np.any(M < 0):
        raise SpecradError("reference oracle requires a square nonnegative matrix")
    A = M + np.eye(n)
    x = np.full(n, 1.0 / n)
    alpha = beta = np.nan
    for _ in range(max_iterations):
        y = A @ x
        ratios = y / x
        alpha, beta = float(ratios.max()), float(ratios.min())
        if alpha - beta <= tol:
            return (alpha + beta) / 2.0 - 1.0
        x = y / y.sum()
    raise NonConvergenceError(
        f"matrix reference did not converge in {max_iterations} iterations",
        lower=beta - 1.0, upper=alpha - 1.0,
    )
