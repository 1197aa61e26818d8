"""Pure-Python (numpy/scipy) implementations of the hot simulation kernels.

These are the fallback used when the compiled extension is unavailable. Every
function here must produce bit-identical results to its compiled counterpart:
the walk consumes pre-drawn skip counts (the random draws themselves happen in
shared code), and the graph measures are exact integer computations.
"""

from __future__ import annotations

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

NAME = "python"


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _unrank_pairs(n: int, pos: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Map linear indices over the upper triangle (lexicographic) to (i, j)."""
    # float guess for the row, then exact integer fixup
    t = pos.astype(np.float64)
    guess = np.floor(n - 0.5 - np.sqrt((n - 0.5) ** 2 - 2.0 * t)).astype(np.int64)
    guess = np.clip(guess, 0, n - 2)

    def offset(r):
        return r * n - (r * (r + 1)) // 2

    for _ in range(4):
        too_low = offset(guess + 1) <= pos
        too_high = offset(guess) > pos
        if not (too_low.any() or too_high.any()):
            break
        guess = guess + too_low.astype(np.int64) - too_high.astype(np.int64)
    i = guess
    j = pos - offset(i) + i + 1
    return i, j


def walk_pairs(n: int, start: int, skips: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Advance through the linearized pair sequence by skips[t] + 1 per step.

    Returns the (i, j) pairs of every candidate position that lands inside
    the sequence plus the final position reached (>= pair_count(n) once the
    walk has left the sequence; the caller stops requesting blocks then).
    """
    m = pair_count(n)
    pos = start + np.cumsum(skips.astype(np.int64) + 1)
    if len(pos) == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64), start
    over = pos >= m
    if over.any():
        cut = int(np.argmax(over))  # stop at the first position past the sequence
        end_pos = int(pos[cut])
        pos = pos[:cut]
    else:
        end_pos = int(pos[-1])
    if len(pos) == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64), end_pos
    i, j = _unrank_pairs(n, pos)
    return i, j, end_pos


def components(n: int, edges_i: np.ndarray, edges_j: np.ndarray) -> np.ndarray:
    """Connected-component labels, numbered by first appearance in node order."""
    if len(edges_i) == 0:
        return np.arange(n, dtype=np.int64)
    data = np.ones(len(edges_i), dtype=np.int8)
    adj = sparse.csr_matrix((data, (edges_i, edges_j)), shape=(n, n))
    _, labels = csgraph.connected_components(adj, directed=False)
    _, first_pos = np.unique(labels, return_index=True)
    rank = np.argsort(np.argsort(first_pos))
    return rank[labels].astype(np.int64)


def diameter_csr(n: int, indptr: np.ndarray, indices: np.ndarray) -> int:
    """Exact diameter by all-source BFS; -1 when the graph is disconnected."""
    if n <= 1:
        return 0
    if len(indices) == 0:
        return -1
    adj = sparse.csr_matrix(
        (np.ones(len(indices), dtype=np.int8), indices.astype(np.int64), indptr.astype(np.int64)),
        shape=(n, n),
    )
    dist = csgraph.shortest_path(adj, method="D", directed=False, unweighted=True)
    if np.isinf(dist).any():
        return -1
    return int(dist.max())


def bfs_eccentricity(n: int, indptr: np.ndarray, indices: np.ndarray, source: int) -> int:
    """Eccentricity of one node; -1 if it does not reach the whole graph."""
    dist = csgraph.shortest_path(
        sparse.csr_matrix(
            (np.ones(len(indices), dtype=np.int8), indices.astype(np.int64), indptr.astype(np.int64)),
            shape=(n, n),
        ),
        method="D", directed=False, unweighted=True, indices=source,
    )
    if np.isinf(dist).any():
        return -1
    return int(dist.max())


def isolated_triangles(n: int, indptr: np.ndarray, indices: np.ndarray,
                       degrees: np.ndarray) -> int:
    """Count triangles whose three vertices have no other links.

    Every vertex of such a triangle has degree exactly 2, so only degree-2
    vertices are inspected and each triangle is counted once from its
    smallest vertex.
    """
    count = 0
    for a in np.flatnonzero(degrees == 2):
        s = indptr[a]
        b, c = int(indices[s]), int(indices[s + 1])
        if a < b and degrees[b] == 2 and degrees[c] == 2:
            sb = indptr[b]
            if indices[sb] == c or indices[sb + 1] == c:
                count += 1
    return count
