"""Independent oracles for the test suite.

Everything here recomputes expectations from first principles (exhaustive
graph enumeration, brute-force recomputation, raw formula transcriptions) and
deliberately shares no code with the package implementations it checks.
"""

from __future__ import annotations

import numpy as np


def all_graphs(n: int) -> np.ndarray:
    """Every labeled simple graph on n nodes as a (2^E, n, n) boolean stack."""
    iu = np.triu_indices(n, k=1)
    n_edges = len(iu[0])
    count = 1 << n_edges
    bits = ((np.arange(count, dtype=np.int64)[:, None] >> np.arange(n_edges)) & 1).astype(bool)
    adj = np.zeros((count, n, n), dtype=bool)
    adj[:, iu[0], iu[1]] = bits
    adj |= adj.transpose(0, 2, 1)
    return adj


def graph_probabilities(adj: np.ndarray, pair_probs: np.ndarray) -> np.ndarray:
    """Probability of each graph when pair {i,j} appears independently w.p. pair_probs[i,j]."""
    n = adj.shape[1]
    iu = np.triu_indices(n, k=1)
    present = adj[:, iu[0], iu[1]]
    pe = pair_probs[iu]
    return np.prod(np.where(present, pe, 1.0 - pe), axis=1)


def friend_and_fof_counts(adj: np.ndarray, agent: int) -> tuple[np.ndarray, np.ndarray]:
    """Realized number of friends and friends-of-friends of one agent, per graph."""
    n = adj.shape[1]
    two_step = np.einsum("bij,bjk->bik", adj.astype(np.int32), adj.astype(np.int32))
    friends = adj[:, agent].sum(axis=1)
    others = np.arange(n) != agent
    fof = ((~adj[:, agent]) & (two_step[:, agent] > 0) & others).sum(axis=1)
    return friends, fof


def enum_expected_counts(pair_probs: np.ndarray, agent: int) -> tuple[float, float]:
    """Exact expected friends and friends-of-friends by summing over all graphs."""
    n = pair_probs.shape[0]
    adj = all_graphs(n)
    probs = graph_probabilities(adj, pair_probs)
    friends, fof = friend_and_fof_counts(adj, agent)
    return float(probs @ friends), float(probs @ fof)


def enum_own_choice_coefficients(n: int, p_other: float, v1: float, v2: float) -> np.ndarray:
    """Exact enumeration of one agent's expected benefit, grouped by own degree.

    Agent 0 links to each other agent with some probability q while all other
    pairs use p_other. Over all graphs, the expected benefit decomposes as
    sum_a q^a (1-q)^(n-1-a) coeff[a], with coeff[a] collecting
    P(rest of graph) * (v1 * a + v2 * fof_0) over graphs where agent 0 has
    degree a. The full own-choice utility then subtracts the deterministic
    cost term.
    """
    adj = all_graphs(n)
    iu = np.triu_indices(n, k=1)
    own_edge = iu[0] == 0
    present = adj[:, iu[0], iu[1]]
    rest_prob = np.prod(
        np.where(present[:, ~own_edge], p_other, 1.0 - p_other), axis=1
    ) if (~own_edge).any() else np.ones(len(adj))
    degree0 = present[:, own_edge].sum(axis=1)
    _, fof0 = friend_and_fof_counts(adj, 0)
    coeff = np.zeros(n)
    np.add.at(coeff, degree0, rest_prob * (v1 * degree0 + v2 * fof0))
    return coeff


def enum_own_choice_utility(q_grid: np.ndarray, coeff: np.ndarray, n: int,
                            c: float, alpha: float = 2.0) -> np.ndarray:
    """Own-choice expected utility on a grid of own link probabilities."""
    benefit = np.zeros_like(q_grid)
    for a in range(n):
        benefit += coeff[a] * q_grid ** a * (1.0 - q_grid) ** (n - 1 - a)
    return benefit - (c / alpha) * ((n - 1) * q_grid) ** alpha


def realized_benefit(adj: np.ndarray, agent: int, v1: float, v2: float) -> float:
    """Network benefit of one agent in one realized graph."""
    n = adj.shape[0]
    two_step = (adj.astype(np.int32) @ adj.astype(np.int32))
    friends = int(adj[agent].sum())
    others = np.arange(n) != agent
    fof = int(((~adj[agent]) & (two_step[agent] > 0) & others).sum())
    return v1 * friends + v2 * fof


def brute_severing_losses(adj: np.ndarray, v1: float, v2: float) -> dict[tuple[int, int], float]:
    """Benefit decrease from deleting each incident link, by full recomputation."""
    n = adj.shape[0]
    losses = {}
    for i in range(n):
        for j in range(n):
            if i != j and adj[i, j]:
                cut = adj.copy()
                cut[i, j] = cut[j, i] = False
                losses[(i, j)] = realized_benefit(adj, i, v1, v2) - realized_benefit(cut, i, v1, v2)
    return losses


def hetero_foc_rhs_prerewrite(h: int, x: np.ndarray, costs: np.ndarray,
                              probs: np.ndarray, n: int, v1: float, v2: float) -> float:
    """The heterogeneous first-order condition before algebraic consolidation.

    c_h = [ (v1-v2) E[X]
            + v2 E[ X (1 - x_h E[X^2] X)^(n-2)
                    + (1 - x_h X)(n-2) X E[X^2] (1 - x_h E[X^2] X)^(n-3) ] ]
          / [ x_h (E[X^2] + (n-2) E[X]^2) ]
    """
    q = np.asarray(probs, float)
    x = np.asarray(x, float)
    ex = q @ x
    ex2 = q @ (x * x)
    xh = x[h]
    base = 1.0 - xh * ex2 * x
    inner = x * base ** (n - 2) + (1.0 - xh * x) * (n - 2) * x * ex2 * base ** (n - 3)
    numerator = (v1 - v2) * ex + v2 * (q @ inner)
    return float(numerator / (xh * (ex2 + (n - 2) * ex * ex)))


def central_difference(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)
