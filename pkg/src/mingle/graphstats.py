"""Measurements on realized networks: connectivity, diameter, triangles, stability.

These are read-only analyses over immutable Network values. The component,
diameter, and triangle computations dispatch to the kernel backend; the
severing analysis is exact linear algebra on the adjacency matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .sampler import Network

DIAMETER_EXACT_LIMIT = 2000


@dataclass(frozen=True)
class GraphStats:
    """Summary measurements of one realized network."""

    is_connected: bool
    num_components: int
    largest_component_size: int
    diameter: float  # integer-valued when finite; math.inf when disconnected
    mean_degree: float
    isolated_triangle_count: int
    diameter_is_exact: bool = True


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of the link-severing check under a per-link maintenance cost.

    violating_links holds (agent, neighbor, marginal_benefit) for every
    incident link whose deletion costs the agent less than the maintenance
    cost; the network is unilaterally stable exactly when the list is empty.
    """

    is_unilaterally_stable: bool
    violating_links: list[tuple[int, int, float]]


def component_labels(g: Network) -> np.ndarray:
    """Component id per node, numbered by smallest member node."""
    return _backend.active.components(
        g.n, np.ascontiguousarray(g.edges[:, 0]), np.ascontiguousarray(g.edges[:, 1])
    )


def connected_components(g: Network) -> list[np.ndarray]:
    """Partition of the nodes into components, ordered by smallest node index."""
    labels = component_labels(g)
    order = np.argsort(labels, kind="stable")
    boundaries = np.flatnonzero(np.diff(labels[order])) + 1
    return [np.sort(part) for part in np.split(np.arange(g.n)[order], boundaries)]


def is_connected(g: Network) -> bool:
    return g.n <= 1 or component_labels(g).max() == 0


def giant_component_fraction(g: Network) -> float:
    """Size of the largest component divided by n."""
    labels = component_labels(g)
    return float(np.bincount(labels).max()) / g.n


def diameter(g: Network, exact_limit: int = DIAMETER_EXACT_LIMIT,
             sample_sources: int = 64) -> float:
    """Largest distance between any two nodes; math.inf when disconnected.

    Exact all-source BFS up to ``exact_limit`` nodes. Beyond that the value
    is a lower-bound estimate from BFS eccentricities of evenly spaced source
    nodes (flag it via network_stats' diameter_is_exact); no acceptance-scale
    analysis needs exact diameters on graphs that large.
    """
    value, _ = _diameter_impl(g, exact_limit, sample_sources)
    return value


def _diameter_impl(g: Network, exact_limit: int, sample_sources: int) -> tuple[float, bool]:
    if g.n <= 1:
        return 0.0, True
    indptr, indices = g.to_csr()
    if g.n <= exact_limit:
        d = _backend.active.diameter_csr(g.n, indptr, indices)
        return (math.inf if d < 0 else float(d)), True
    best = 0
    for source in np.linspace(0, g.n - 1, num=min(sample_sources, g.n), dtype=np.int64):
        ecc = _backend.active.bfs_eccentricity(g.n, indptr, indices, int(source))
        if ecc < 0:
            return math.inf, True  # disconnectedness is detected exactly
        best = max(best, ecc)
    return float(best), False


def count_isolated_triangles(g: Network) -> int:
    """Triples of mutually linked agents with no links to anyone else."""
    indptr, indices = g.to_csr()
    return int(_backend.active.isolated_triangles(g.n, indptr, indices, g.degrees()))


def severing_losses(g: Network, v1: float, v2: float) -> np.ndarray:
    """Exact benefit decrease to agent i from deleting each incident link ij.

    Deleting ij always forfeits the direct value v1; it recovers v2 when j
    stays reachable as a friend of friend (some common neighbor exists), and
    it additionally forfeits v2 for every contact h that was reachable at
    distance two only through j. Returned as a dense matrix L with
    L[i, j] set on adjacent pairs (both orientations) and 0 elsewhere.
    """
    if not v1 > v2 >= 0:
        raise ValueError(f"need v1 > v2 >= 0, got v1={v1}, v2={v2}")
    n = g.n
    adj = np.zeros((n, n), dtype=bool)
    adj[g.edges[:, 0], g.edges[:, 1]] = True
    adj |= adj.T
    a_int = adj.astype(np.int64)
    common = a_int @ a_int  # common[i, h] = number of two-step paths i -> h
    only_via = (~adj) & (common == 1)
    np.fill_diagonal(only_via, False)
    lost_fof = only_via.astype(np.int64) @ a_int  # lost_fof[i, j]: h with j the sole connector
    keeps_j = (common > 0) & adj
    losses = np.where(adj, v1 - v2 * keeps_j + v2 * lost_fof, 0.0)
    return losses


def unilateral_stability(g: Network, v1: float, v2: float,
                         maintenance_cost: float) -> StabilityReport:
    """Check whether any agent strictly gains by severing one realized link.

    A link ij is worth keeping to agent i when the exact benefit decrease
    from deleting it is at least the maintenance cost; it is violating when
    the decrease is strictly smaller.
    """
    if maintenance_cost < 0:
        raise ValueError("maintenance cost must be nonnegative")
    losses = severing_losses(g, v1, v2)
    violations = []
    for i, j in g.edges:
        for a, b in ((int(i), int(j)), (int(j), int(i))):
            if losses[a, b] < maintenance_cost:
                violations.append((a, b, float(losses[a, b])))
    violations.sort()
    return StabilityReport(
        is_unilaterally_stable=not violations,
        violating_links=violations,
    )


def network_stats(g: Network, exact_diameter_limit: int = DIAMETER_EXACT_LIMIT) -> GraphStats:
    """All scalar measurements of one network in a single pass."""
    labels = component_labels(g)
    sizes = np.bincount(labels) if g.n else np.array([0])
    connected = len(sizes) == 1
    diam, exact = _diameter_impl(g, exact_diameter_limit, 64)
    return GraphStats(
        is_connected=connected,
        num_components=len(sizes),
        largest_component_size=int(sizes.max()),
        diameter=diam,
        mean_degree=g.mean_degree(),
        isolated_triangle_count=count_isolated_triangles(g),
        diameter_is_exact=exact,
    )
