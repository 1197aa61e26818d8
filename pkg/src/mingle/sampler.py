"""Seeded sampling of realized networks from intensity profiles.

Links form independently across pairs with probability kernel(x_i, x_j), the
inhomogeneous random graph the model induces. Reproducibility contract: a
network is a pure function of (rng algorithm, seed, profile, kernel). The
generator is counter-based (numpy Philox keyed directly by the 64-bit seed,
identified as RNG_ALGORITHM in output files), batch members get seeds from a
SplitMix64 mix of the base seed, and random draws are consumed in fixed-size
blocks so the compiled and pure-Python kernel backends realize identical
networks.

Sparse regimes (every pair probability below 1%) are sampled by geometric
skipping along the linearized pair sequence with an envelope probability and
per-candidate acceptance, so huge sparse graphs cost time proportional to the
number of candidate edges rather than n^2. Dense regimes draw one uniform per
pair in fixed chunks. Both paths sample the exact same distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from ._backend import _pykernels
from .equilibrium import solve_symmetric_equilibrium
from .model import InteractionKernel, IntensityProfile
from .params import ModelParams

RNG_ALGORITHM = "philox4x64:v1"
SPARSE_THRESHOLD = 0.01
_BLOCK_CANDIDATES = 512
_DENSE_CHUNK = 1 << 20
_MASK64 = (1 << 64) - 1


def splitmix64(value: int) -> int:
    """One output of the SplitMix64 stream; the documented seed-mixing primitive."""
    z = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def mix_seed(base_seed: int, index: int) -> int:
    """Derived seed for batch member ``index``: element ``index`` of the
    SplitMix64 stream started at ``base_seed``."""
    if index < 0:
        raise ValueError("batch index must be nonnegative")
    return splitmix64((base_seed + index * 0x9E3779B97F4A7C15) & _MASK64)


@dataclass(frozen=True)
class Network:
    """Realized undirected simple graph with its generating seed.

    ``edges`` is an (m, 2) int64 array with i < j in ascending lexicographic
    order, which makes serialized networks diffable byte for byte.
    """

    n: int
    edges: np.ndarray
    seed: int

    def __post_init__(self):
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if len(edges):
            if edges.min() < 0 or edges.max() >= self.n:
                raise ValueError("edge endpoints out of range")
            if np.any(edges[:, 0] >= edges[:, 1]):
                raise ValueError("edges must satisfy i < j")
            order = np.lexsort((edges[:, 1], edges[:, 0]))
            edges = edges[order]
            if np.any((np.diff(edges[:, 0]) == 0) & (np.diff(edges[:, 1]) == 0)):
                raise ValueError("duplicate edges")
        edges = edges.copy()
        edges.flags.writeable = False
        object.__setattr__(self, "edges", edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.bincount(self.edges[:, 0], minlength=self.n)
        deg += np.bincount(self.edges[:, 1], minlength=self.n)
        return deg.astype(np.int64)

    def mean_degree(self) -> float:
        return 2.0 * self.num_edges / self.n

    def to_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Symmetric adjacency in CSR form (indptr, indices), both int64."""
        src = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        dst = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        order = np.lexsort((dst, src))
        indices = dst[order]
        counts = np.bincount(src, minlength=self.n)
        indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        return indptr, indices.astype(np.int64)


@dataclass(frozen=True)
class SampleBatchSpec:
    """How many networks to draw and from which base seed."""

    count: int
    base_seed: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed & _MASK64))


def _pair_probabilities(kernel: InteractionKernel, xi: np.ndarray, xj: np.ndarray) -> np.ndarray:
    if kernel.kind == "product":
        return xi * xj
    out = np.empty(len(xi))
    for t in range(len(xi)):
        out[t] = kernel.evaluate(float(xi[t]), float(xj[t]))
    return out


def _sample_sparse(n: int, x: np.ndarray, kernel: InteractionKernel, q: float,
                   constant: bool, rng: np.random.Generator) -> np.ndarray:
    """Geometric skipping with envelope q; acceptance thins to p_ij when needed."""
    m = _pykernels.pair_count(n)
    log_keep = math.log1p(-q)
    walk = _backend.active.walk_pairs
    rows, cols = [], []
    pos = -1
    while pos < m:
        if constant:
            u = rng.random(_BLOCK_CANDIDATES)
            skips = np.floor(np.log(np.maximum(u, 1e-300)) / log_keep).astype(np.int64)
            bi, bj, pos = walk(n, pos, skips)
        else:
            u = rng.random(2 * _BLOCK_CANDIDATES)
            skips = np.floor(np.log(np.maximum(u[0::2], 1e-300)) / log_keep).astype(np.int64)
            bi, bj, pos = walk(n, pos, skips)
            accept = u[1::2][: len(bi)] < _pair_probabilities(kernel, x[bi], x[bj]) / q
            bi, bj = bi[accept], bj[accept]
        rows.append(bi)
        cols.append(bj)
    if not rows:
        return np.empty((0, 2), dtype=np.int64)
    return np.column_stack([np.concatenate(rows), np.concatenate(cols)])


def _sample_dense(n: int, x: np.ndarray, kernel: InteractionKernel,
                  rng: np.random.Generator) -> np.ndarray:
    """One uniform per pair, drawn in fixed-size chunks over the pair sequence."""
    m = _pykernels.pair_count(n)
    rows, cols = [], []
    for lo in range(0, m, _DENSE_CHUNK):
        hi = min(lo + _DENSE_CHUNK, m)
        u = rng.random(hi - lo)
        ci, cj = _pykernels._unrank_pairs(n, np.arange(lo, hi, dtype=np.int64))
        keep = u < _pair_probabilities(kernel, x[ci], x[cj])
        rows.append(ci[keep])
        cols.append(cj[keep])
    if not rows:
        return np.empty((0, 2), dtype=np.int64)
    return np.column_stack([np.concatenate(rows), np.concatenate(cols)])


def sample_network(profile: IntensityProfile, kernel: InteractionKernel, seed: int) -> Network:
    """Draw one network: pair {i,j} is linked independently with probability
    kernel(x_i, x_j). Identical (profile, kernel, seed) give identical output."""
    x = profile.values
    n = len(x)
    xmax = float(x.max()) if n else 0.0
    q = kernel.evaluate(xmax, xmax)
    rng = _rng(seed)
    if n < 2 or q <= 0.0:
        edges = np.empty((0, 2), dtype=np.int64)
    elif q < SPARSE_THRESHOLD:
        constant = bool(np.all(x == x[0]))
        edges = _sample_sparse(n, x, kernel, q, constant, rng)
    else:
        edges = _sample_dense(n, x, kernel, rng)
    return Network(n=n, edges=edges, seed=seed)


def sample_gnp(n: int, p: float, seed: int) -> Network:
    """Homogeneous special case: every pair linked with the same probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    profile = IntensityProfile.constant(n, math.sqrt(p))
    return sample_network(profile, InteractionKernel.product(), seed)


def sample_equilibrium_network(params: ModelParams, seed: int) -> Network:
    """Solve the symmetric equilibrium and realize one network at p_star."""
    solution = solve_symmetric_equilibrium(params)
    return sample_gnp(params.n, solution.p_star, seed)


def sample_batch(spec: SampleBatchSpec, profile: IntensityProfile,
                 kernel: InteractionKernel) -> list[Network]:
    """Draw ``spec.count`` networks; member k uses seed mix_seed(base_seed, k),
    so batches are order-independent and parallelizable without shared streams."""
    return [
        sample_network(profile, kernel, mix_seed(spec.base_seed, k))
        for k in range(spec.count)
    ]


def write_edge_list(net: Network, path) -> None:
    """Serialize: '# n=<n> seed=<seed>' header, one 'i j' line per edge
    (0-indexed, i < j, ascending lexicographic), plus the rng identifier as a
    second comment line for provenance."""
    with open(path, "w", newline="\n") as fh:
        fh.write(f"# n={net.n} seed={net.seed}\n")
        fh.write(f"# rng={RNG_ALGORITHM}\n")
        for i, j in net.edges:
            fh.write(f"{i} {j}\n")


def read_edge_list(path) -> Network:
    """Parse a file written by write_edge_list."""
    n = seed = None
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for token in line[1:].split():
                    if token.startswith("n="):
                        n = int(token[2:])
                    elif token.startswith("seed="):
                        seed = int(token[5:])
                continue
            a, b = line.split()
            rows.append((int(a), int(b)))
    if n is None or seed is None:
        raise ValueError(f"{path}: missing '# n=<n> seed=<seed>' header")
    edges = np.array(rows, dtype=np.int64).reshape(-1, 2)
    return Network(n=n, edges=edges, seed=seed)
