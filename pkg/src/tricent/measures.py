"""Centrality measures: the triangle-neighborhood score and six baselines."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, Sequence, Tuple

import numpy as np
from scipy import sparse

from .graph import Graph, NodeId, triangle_neighbors, triangles_at


class ConvergenceError(RuntimeError):
    """An iterative solver ran out of iterations; carries the last residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class Measure(str, Enum):
    """Stable textual tags for every score the library can compute."""

    TC = "TC"  # triangle-neighborhood (mobility-style) centrality
    TR = "TR"  # triangles incident to the node
    DC = "DC"  # degree
    BC = "BC"  # shortest-path betweenness
    CNC = "CNC"  # closeness
    EC = "EC"  # eigenvector
    PR = "PR"  # PageRank
    SDEG = "SDEG"  # triangle-neighborhood size

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class ScoreVector:
    """One finite score per node of the source graph, for one measure."""

    measure: Measure
    scores: Mapping[NodeId, float]

    def __getitem__(self, node: NodeId) -> float:
        return self.scores[node]

    def __len__(self) -> int:
        return len(self.scores)

    def __iter__(self) -> Iterator[NodeId]:
        return iter(self.scores)

    def items(self) -> Iterator[Tuple[NodeId, float]]:
        return iter(self.scores.items())


def _require_nonempty(g: Graph) -> None:
    if g.node_count == 0:
        raise ValueError("measure needs a nonempty graph")


def sdeg(g: Graph, i: NodeId) -> int:
    """Size of node i's triangle-connected neighborhood; never exceeds deg(i)."""
    return len(triangle_neighbors(g, i).members)


def tr_centrality(g: Graph) -> ScoreVector:
    """Tr-centrality: a mobility-style influence score on triangle neighborhoods.

    For node i, let gamma_i be its triangle-connected neighbors (sdeg_i =
    |gamma_i|), NT_i the number of edges among i's neighbors (= triangles
    incident to i), and G_i the subgraph induced on {i} | gamma_i. Treating
    G_i like a planar linkage whose joints constrain its sdeg_i + 1 nodes:

        TC_i = 0.01 * [ 3*sdeg_i - (2*(sdeg_i + 1) + NT_i) + D_i ]

    where D_i is the sum of the in-subgraph degrees of all nodes of G_i.
    Since every edge among i's neighbors joins two triangle neighbors,
    G_i has exactly sdeg_i + NT_i edges, so D_i = 2*(sdeg_i + NT_i) and the
    whole expression collapses to 0.01 * (3*sdeg_i + NT_i - 2). The 0.01
    factor only keeps values small on large networks; it never affects rank
    order. Triangle-free nodes score -0.02.
    """
    _require_nonempty(g)
    out: dict[NodeId, float] = {}
    for i in g.nodes:
        members = triangle_neighbors(g, i).members
        s = len(members)
        nt = triangles_at(g, i)
        cell = members | {i}
        in_degree_sum = sum(len(g.neighbors(j) & cell) for j in cell)
        out[i] = 0.01 * (3 * s - (2 * (s + 1) + nt) + in_degree_sum)
    return ScoreVector(Measure.TC, out)


def sdeg_centrality(g: Graph) -> ScoreVector:
    """Triangle-neighborhood sizes as a score vector."""
    _require_nonempty(g)
    return ScoreVector(Measure.SDEG, {i: float(sdeg(g, i)) for i in g.nodes})


def triangle_count_centrality(g: Graph) -> ScoreVector:
    """Per-node count of incident triangles."""
    _require_nonempty(g)
    return ScoreVector(Measure.TR, {i: float(triangles_at(g, i)) for i in g.nodes})


def degree_centrality(g: Graph) -> ScoreVector:
    """Plain degree (number of direct links)."""
    _require_nonempty(g)
    return ScoreVector(Measure.DC, {i: float(g.degree(i)) for i in g.nodes})


def betweenness_centrality(g: Graph, normalized: bool = True) -> ScoreVector:
    """Shortest-path betweenness over unordered node pairs (Brandes).

    Each node's score is the sum over pairs (s, t) of the fraction of
    shortest s-t paths passing through it. With ``normalized`` the sum is
    scaled by 2/((n-1)(n-2)) for n >= 3, which never changes rank order;
    ``normalized=False`` returns the raw pair fractions.
    """
    _require_nonempty(g)
    acc = dict.fromkeys(g.nodes, 0.0)
    for s in g.nodes:
        stack: list[NodeId] = []
        pred: dict[NodeId, list[NodeId]] = {v: [] for v in g.nodes}
        sigma = dict.fromkeys(g.nodes, 0)
        sigma[s] = 1
        dist = dict.fromkeys(g.nodes, -1)
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in g.neighbors(v):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    pred[w].append(v)
        delta = dict.fromkeys(g.nodes, 0.0)
        while stack:
            w = stack.pop()
            for v in pred[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                acc[w] += delta[w]
    # every unordered pair was accumulated from both endpoints
    n = g.node_count
    scale = 1.0 / ((n - 1) * (n - 2)) if normalized and n >= 3 else 0.5
    return ScoreVector(Measure.BC, {v: acc[v] * scale for v in g.nodes})


def closeness_centrality(g: Graph) -> ScoreVector:
    """Closeness with reachable-component scaling.

    With r(i) nodes reachable from i (excluding i) at total shortest-path
    distance S(i): score(i) = (r/(n-1)) * (r/S), which reduces to (n-1)/S(i)
    on connected graphs and to 0 for nodes that reach nothing.
    """
    _require_nonempty(g)
    n = g.node_count
    out: dict[NodeId, float] = {}
    for s in g.nodes:
        dist = {s: 0}
        queue = deque([s])
        total = 0
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    total += dist[w]
                    queue.append(w)
        reached = len(dist) - 1
        out[s] = (reached / (n - 1)) * (reached / total) if reached > 0 else 0.0
    return ScoreVector(Measure.CNC, out)


def _adjacency_matrix(g: Graph, order: Sequence[NodeId]) -> sparse.csr_matrix:
    index = {v: i for i, v in enumerate(order)}
    rows: list[int] = []
    cols: list[int] = []
    for u in order:
        for v in g.neighbors(u):
            rows.append(index[u])
            cols.append(index[v])
    data = np.ones(len(rows))
    return sparse.csr_matrix((data, (rows, cols)), shape=(len(order), len(order)))


def eigenvector_centrality(g: Graph, tol: float = 1e-10, max_iter: int = 1000) -> ScoreVector:
    """Principal-eigenvector scores by power iteration from the uniform vector.

    Returns x with unit Euclidean length and nonnegative entries satisfying
    A x = lambda x up to a max-norm residual below ``tol``. Iteration uses the
    shifted operator A + I so bipartite structure cannot oscillate. Graphs
    without edges score 0 everywhere; isolated nodes decay to ~0.
    """
    _require_nonempty(g)
    if tol <= 0:
        raise ValueError("tol must be positive")
    order = sorted(g.nodes)
    if g.edge_count == 0:
        return ScoreVector(Measure.EC, {v: 0.0 for v in order})
    a = _adjacency_matrix(g, order)
    n = len(order)
    x = np.full(n, 1.0 / math.sqrt(n))
    residual = math.inf
    for _ in range(max_iter):
        ax = a @ x
        lam = float(x @ ax)
        residual = float(np.max(np.abs(ax - lam * x)))
        if residual < tol:
            return ScoreVector(Measure.EC, {v: float(x[i]) for i, v in enumerate(order)})
        y = ax + x
        x = y / float(np.linalg.norm(y))
    raise ConvergenceError(f"eigenvector iteration did not converge in {max_iter} steps", residual)


def pagerank(
    g: Graph,
    damping: float = 0.85,
    tol: float = 1e-10,
    max_iter: int = 1000,
) -> ScoreVector:
    """PageRank on the undirected graph, every edge acting in both directions.

    Fixed point of PR(i) = (1-d)/n + d * sum_{j ~ i} PR(j)/deg(j), with the
    mass of degree-0 nodes redistributed uniformly. Stops once the largest
    per-node change drops below ``tol``; scores always sum to 1 within
    floating-point error.
    """
    _require_nonempty(g)
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must lie strictly between 0 and 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    order = sorted(g.nodes)
    n = len(order)
    a = _adjacency_matrix(g, order)
    deg = np.array([g.degree(v) for v in order], dtype=float)
    dangling = deg == 0.0
    safe_deg = np.where(dangling, 1.0, deg)
    rank = np.full(n, 1.0 / n)
    change = math.inf
    for _ in range(max_iter):
        share = np.where(dangling, 0.0, rank) / safe_deg
        loose_mass = float(rank[dangling].sum())
        nxt = (1.0 - damping) / n + damping * (a @ share + loose_mass / n)
        change = float(np.max(np.abs(nxt - rank)))
        rank = nxt
        if change < tol:
            return ScoreVector(Measure.PR, {v: float(rank[i]) for i, v in enumerate(order)})
    raise ConvergenceError(f"pagerank did not converge in {max_iter} steps", change)


def compute(
    g: Graph,
    measure: Measure,
    *,
    damping: float = 0.85,
    tol: float = 1e-10,
    max_iter: int = 1000,
) -> ScoreVector:
    """Uniform dispatch: compute any :class:`Measure` over ``g``.

    The numeric parameters only affect EC (tol, max_iter) and PR (all three).
    Deterministic for fixed inputs.
    """
    measure = Measure(measure)
    if measure is Measure.TC:
        return tr_centrality(g)
    if measure is Measure.TR:
        return triangle_count_centrality(g)
    if measure is Measure.DC:
        return degree_centrality(g)
    if measure is Measure.BC:
        return betweenness_centrality(g)
    if measure is Measure.CNC:
        return closeness_centrality(g)
    if measure is Measure.EC:
        return eigenvector_centrality(g, tol=tol, max_iter=max_iter)
    if measure is Measure.PR:
        return pagerank(g, damping=damping, tol=tol, max_iter=max_iter)
    return sdeg_centrality(g)
