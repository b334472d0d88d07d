"""Eleven centrality measures and their variants on collocation networks.

Conventions shared by every measure:

* a self-loop contributes 2 to undirected degree/strength and 1 each to
  the in and out sides;
* weighted shortest-path measures treat edge weights as distances, so a
  frequent bigram makes a *longer* edge (kept this way on purpose; it is
  what the usual graph toolkits do and rankings are evaluated as-is);
* unreachable node pairs count distance |V| in closeness;
* degenerate scores (clustering with degree < 2, diversity with at most
  one incident edge, HITS on an edgeless graph) are 0 so that every node
  stays rankable;
* eigenvector and HITS scores are normalized to a maximum of 1,
  PageRank sums to 1.

All measures are pure functions of an immutable network and may run
concurrently.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import dijkstra, shortest_path

DESCENDING = "descending"
ASCENDING = "ascending"

_SOURCE_BLOCK = 1024  # bounds the dense matrices of all-pairs passes

MODES = ("in", "out", "all")
INTERPRETATIONS = (
    "directed_weighted",
    "directed_unweighted",
    "undirected_weighted",
    "undirected_unweighted",
)


class ConvergenceError(Exception):
    """An iterative measure failed to converge; carries the last residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class DampingConfig:
    """PageRank iteration parameters."""

    damping: float = 0.85
    tolerance: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must be in (0, 1)")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")


@dataclass
class CentralityResult:
    """Per-node scores for one (measure, variant) combination."""

    measure: str
    variant: str
    scores: dict[str, float]
    rank_direction: str = DESCENDING

    @property
    def key(self) -> str:
        return f"{self.measure}.{self.variant}" if self.variant else self.measure


# -- indexed view of a network ------------------------------------------------


class _Indexed:
    """Label-indexed arc arrays for one network."""

    def __init__(self, net):
        self.net = net
        self.labels: list[str] = net.labels()
        self.index = {label: i for i, label in enumerate(self.labels)}
        self.n = len(self.labels)
        self.arcs = [
            (self.index[u], self.index[v], w) for u, v, w in net.edges()
        ]

    def result(self, values, measure: str, variant: str, direction=DESCENDING):
        scores = {label: float(values[i]) for i, label in enumerate(self.labels)}
        return CentralityResult(measure, variant, scores, direction)

    def undirected_arcs(self) -> list[tuple[int, int, float]]:
        """Arcs of the undirected view: reciprocal edges merged, loops kept once."""
        if not self.net.directed:
            return list(self.arcs)
        merged: dict[tuple[int, int], float] = {}
        for u, v, w in self.arcs:
            key = (u, v) if u <= v else (v, u)
            merged[key] = merged.get(key, 0.0) + w
        return [(u, v, w) for (u, v), w in merged.items()]

    def adjacency(
        self, interpretation: str, weighted: bool, loops: bool = True
    ) -> sp.csr_matrix:
        """Sparse adjacency for "directed" or "undirected" interpretation.

        The undirected interpretation symmetrizes merged weights; the
        unweighted flavour binarizes after merging.
        """
        rows, cols, data = [], [], []
        if interpretation == "directed":
            if not self.net.directed:
                raise ValueError("directed interpretation needs a directed network")
            arcs = self.arcs
            for u, v, w in arcs:
                if u == v and not loops:
                    continue
                rows.append(u)
                cols.append(v)
                data.append(1.0 if not weighted else w)
        elif interpretation == "undirected":
            for u, v, w in self.undirected_arcs():
                if u == v:
                    if loops:
                        rows.append(u)
                        cols.append(u)
                        data.append(1.0 if not weighted else w)
                    continue
                value = 1.0 if not weighted else w
                rows.extend((u, v))
                cols.extend((v, u))
                data.extend((value, value))
        else:
            raise ValueError(f"unknown interpretation {interpretation!r}")
        return sp.csr_matrix(
            (data, (rows, cols)), shape=(self.n, self.n), dtype=np.float64
        )


def _require_mode(net, mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("in", "out") and not net.directed:
        raise ValueError(f"mode {mode!r} requires a directed network")


# -- local measures -----------------------------------------------------------


def degree(net, mode: str = "all") -> CentralityResult:
    """Number of edges incident to each node (weights ignored)."""
    _require_mode(net, mode)
    g = _Indexed(net)
    values = np.zeros(g.n)
    for u, v, _ in g.arcs:
        if net.directed:
            if mode in ("out", "all"):
                values[u] += 1
            if mode in ("in", "all"):
                values[v] += 1
        else:
            values[u] += 1
            values[v] += 1  # loop (u == v) contributes 2
    return g.result(values, "degree", mode)


def strength(net, mode: str = "all") -> CentralityResult:
    """Sum of the weights of the edges incident to each node."""
    _require_mode(net, mode)
    g = _Indexed(net)
    values = np.zeros(g.n)
    for u, v, w in g.arcs:
        if net.directed:
            if mode in ("out", "all"):
                values[u] += w
            if mode in ("in", "all"):
                values[v] += w
        else:
            values[u] += w
            values[v] += w
    return g.result(values, "strength", mode)


def neighborhood_size(net, mode: str = "all") -> CentralityResult:
    """Number of distinct immediate neighbors, the node itself excluded."""
    _require_mode(net, mode)
    g = _Indexed(net)
    neighbors: list[set[int]] = [set() for _ in range(g.n)]
    for u, v, _ in g.arcs:
        if u == v:
            continue
        if net.directed:
            if mode in ("out", "all"):
                neighbors[u].add(v)
            if mode in ("in", "all"):
                neighbors[v].add(u)
        else:
            neighbors[u].add(v)
            neighbors[v].add(u)
    return g.result([len(s) for s in neighbors], "neighborhood_size", mode)


def coreness(net, mode: str = "all") -> CentralityResult:
    """Outermost k-core number per node, on unweighted degrees of the mode.

    Self-loops are ignored.  The k-core is the maximal subgraph whose
    every node has degree (of the chosen mode) >= k; peeling removes a
    minimum-degree node at a time.
    """
    _require_mode(net, mode)
    g = _Indexed(net)
    # counts[v] = current degree; shed[v] lists (neighbor, amount) pairs to
    # decrement when v is removed.
    counts = [0] * g.n
    shed: list[list[int]] = [[] for _ in range(g.n)]
    for u, v, _ in g.arcs:
        if u == v:
            continue
        if net.directed:
            if mode in ("out", "all"):
                counts[u] += 1
                shed[v].append(u)
            if mode in ("in", "all"):
                counts[v] += 1
                shed[u].append(v)
        else:
            counts[u] += 1
            counts[v] += 1
            shed[u].append(v)
            shed[v].append(u)
    core = [0] * g.n
    removed = [False] * g.n
    heap = [(c, i) for i, c in enumerate(counts)]
    heapq.heapify(heap)
    level = 0
    while heap:
        c, v = heapq.heappop(heap)
        if removed[v] or c != counts[v]:
            continue  # stale heap entry
        removed[v] = True
        level = max(level, c)
        core[v] = level
        for nbr in shed[v]:
            if not removed[nbr]:
                counts[nbr] -= 1
                heapq.heappush(heap, (counts[nbr], nbr))
    return g.result(core, "coreness", mode)


def _simple_undirected_adjacency(g: _Indexed) -> list[dict[int, float]]:
    """Loop-free undirected adjacency dicts with merged weights."""
    adj: list[dict[int, float]] = [dict() for _ in range(g.n)]
    for u, v, w in g.undirected_arcs():
        if u == v:
            continue
        adj[u][v] = adj[u].get(v, 0.0) + w
        adj[v][u] = adj[v].get(u, 0.0) + w
    return adj


def clustering_coefficient(net, weighted: bool = False) -> CentralityResult:
    """Local clustering on the undirected loop-free view.

    Unweighted: closed neighbor pairs over possible pairs.  Weighted:
    the Barrat local coefficient, sum over closed neighbor pairs of the
    mean of the two spoke weights, normalized by strength * (degree-1).
    Nodes with degree < 2 score 0.
    """
    g = _Indexed(net)
    adj = _simple_undirected_adjacency(g)
    neighbor_sets = [set(a) for a in adj]
    triangles = np.zeros(g.n)
    spoke = np.zeros(g.n)
    seen_pairs = set()
    for j in range(g.n):
        for h in adj[j]:
            if (h, j) in seen_pairs:
                continue
            seen_pairs.add((j, h))
            for i in neighbor_sets[j] & neighbor_sets[h]:
                triangles[i] += 1
                spoke[i] += adj[i][j] + adj[i][h]
    values = np.zeros(g.n)
    for i in range(g.n):
        k = len(adj[i])
        if k < 2:
            continue
        if weighted:
            strength_i = sum(adj[i].values())
            values[i] = spoke[i] / (strength_i * (k - 1))
        else:
            values[i] = 2.0 * triangles[i] / (k * (k - 1))
    np.clip(values, 0.0, 1.0, out=values)
    variant = "weighted" if weighted else "unweighted"
    return g.result(values, "clustering_coefficient", variant)


def structural_diversity(net) -> CentralityResult:
    """Normalized entropy of the weights of the edges incident to a node.

    Nodes with at most one incident edge score 0.  Unlike true
    centralities, candidates are ranked in *increasing* order of
    diversity.
    """
    g = _Indexed(net)
    incident: list[list[float]] = [[] for _ in range(g.n)]
    for u, v, w in g.arcs:
        incident[u].append(w)
        if u != v:
            incident[v].append(w)
    values = np.zeros(g.n)
    for i, weights in enumerate(incident):
        k = len(weights)
        if k <= 1:
            continue
        total = sum(weights)
        entropy = -sum((w / total) * math.log(w / total) for w in weights)
        values[i] = min(1.0, max(0.0, entropy / math.log(k)))
    return g.result(values, "structural_diversity", "na", ASCENDING)


# -- spectral measures --------------------------------------------------------


def _split_interpretation(variant: str) -> tuple[str, bool]:
    if variant not in INTERPRETATIONS:
        raise ValueError(f"unknown variant {variant!r}")
    interpretation, kind = variant.rsplit("_", 1)
    return interpretation, kind == "weighted"


def pagerank(
    net,
    interpretation: str = "directed",
    weighted: bool = True,
    cfg: DampingConfig | None = None,
) -> CentralityResult:
    """Power-iteration PageRank; dangling mass is spread uniformly.

    Scores sum to 1.  Raises :class:`ConvergenceError` when the L1
    change fails to drop below the tolerance in time.
    """
    cfg = cfg or DampingConfig()
    variant = f"{interpretation}_{'weighted' if weighted else 'unweighted'}"
    g = _Indexed(net)
    if g.n == 0:
        return g.result([], "pagerank", variant)
    A = g.adjacency(interpretation, weighted)
    out_weight = np.asarray(A.sum(axis=1)).ravel()
    dangling = out_weight == 0.0
    safe_out = np.where(dangling, 1.0, out_weight)
    AT = A.T.tocsr()
    n = g.n
    d = cfg.damping
    x = np.full(n, 1.0 / n)
    residual = math.inf
    for _ in range(cfg.max_iterations):
        y = np.where(dangling, 0.0, x) / safe_out
        x_next = (1.0 - d) / n + d * (AT @ y + x[dangling].sum() / n)
        residual = float(np.abs(x_next - x).sum())
        x = x_next
        if residual < cfg.tolerance:
            break
    else:
        raise ConvergenceError("pagerank did not converge", residual)
    return g.result(x, "pagerank", variant)


def hits(
    net,
    weighted: bool = True,
    tolerance: float = 1e-10,
    max_iterations: int = 10000,
) -> tuple[CentralityResult, CentralityResult]:
    """Hub and authority scores, max-normalized to 1 each round.

    An edgeless graph yields all-zero scores.
    """
    g = _Indexed(net)
    variant = "weighted" if weighted else "unweighted"
    if g.n == 0:
        empty = g.result([], "hub", variant)
        return empty, g.result([], "authority", variant)
    interpretation = "directed" if net.directed else "undirected"
    A = g.adjacency(interpretation, weighted)
    AT = A.T.tocsr()
    hubs = np.ones(g.n)
    auths = np.ones(g.n)
    residual = math.inf
    for _ in range(max_iterations):
        new_auths = AT @ hubs
        peak = new_auths.max()
        if peak <= 0.0:
            hubs = np.zeros(g.n)
            auths = np.zeros(g.n)
            residual = 0.0
            break
        new_auths /= peak
        new_hubs = A @ new_auths
        peak = new_hubs.max()
        if peak <= 0.0:  # unreachable when auths > 0, kept for safety
            hubs = np.zeros(g.n)
            auths = np.zeros(g.n)
            residual = 0.0
            break
        new_hubs /= peak
        residual = float(
            max(np.abs(new_hubs - hubs).max(), np.abs(new_auths - auths).max())
        )
        hubs, auths = new_hubs, new_auths
        if residual < tolerance:
            break
    else:
        raise ConvergenceError("hits did not converge", residual)
    return g.result(hubs, "hub", variant), g.result(auths, "authority", variant)


def eigenvector(
    net,
    interpretation: str = "directed",
    weighted: bool = True,
    tolerance: float = 1e-12,
    max_iterations: int = 50000,
) -> CentralityResult:
    """Principal-eigenvector centrality, max element normalized to 1.

    In the directed interpretation score flows along edge direction
    (incoming edges carry their source's score).  Power iteration runs
    on I + A^T, which keeps the eigenvectors of A^T while suppressing
    the sign oscillation bipartite graphs would otherwise cause.
    """
    variant = f"{interpretation}_{'weighted' if weighted else 'unweighted'}"
    g = _Indexed(net)
    if g.n == 0:
        return g.result([], "eigenvector", variant)
    AT = g.adjacency(interpretation, weighted).T.tocsr()
    x = np.full(g.n, 1.0 / g.n)
    residual = math.inf
    for _ in range(max_iterations):
        y = AT @ x + x
        peak = y.max()
        if peak <= 0.0:
            return g.result(np.zeros(g.n), "eigenvector", variant)
        y /= peak
        residual = float(np.abs(y - x).max())
        x = y
        if residual < tolerance:
            break
    else:
        # Direction drift can stall when dominant eigenvalues tie (e.g.
        # across disconnected components); the iterate is still a valid
        # principal eigenvector if it satisfies the eigen equation.
        y = AT @ x + x
        rayleigh = float(y @ x) / float(x @ x)
        eigen_residual = float(np.abs(y - rayleigh * x).max()) / max(
            abs(rayleigh), 1e-30
        )
        if eigen_residual > 1e-8:
            raise ConvergenceError(
                "eigenvector centrality did not converge", residual
            )
    peak = x.max()
    if peak > 0:
        x = x / peak
    return g.result(x, "eigenvector", variant)


# -- shortest-path measures ---------------------------------------------------


def _distance_blocks(A: sp.csr_matrix, weighted: bool, sources: np.ndarray):
    """All-pairs distances from the given source rows (C-backed scipy)."""
    if weighted:
        return dijkstra(A, directed=True, indices=sources)
    return shortest_path(A, method="D", directed=True, unweighted=True, indices=sources)


def _brandes_unweighted_block(A, AT, D, Sigma):
    """Dependency accumulation for one block of sources (unweighted).

    D and Sigma come from a level-synchronous multi-source BFS; returns
    the per-node dependency sums of the block.
    """
    levels = int(D[np.isfinite(D)].max()) if np.isfinite(D).any() else 0
    Delta = np.zeros_like(Sigma)
    safe_sigma = np.where(Sigma > 0, Sigma, 1.0)
    for level in range(levels, 0, -1):
        X = np.where(D == level, (1.0 + Delta) / safe_sigma, 0.0)
        Y = (A @ X.T).T  # Y[s, v] = sum over out-neighbors w of X[s, w]
        Delta += Y * Sigma * (D == level - 1)
    return Delta


def _bfs_counts_block(A, AT, sources: np.ndarray, n: int):
    """Multi-source BFS distances and shortest-path counts (vectorized)."""
    b = len(sources)
    D = np.full((b, n), np.inf)
    Sigma = np.zeros((b, n))
    frontier = np.zeros((b, n), dtype=bool)
    D[np.arange(b), sources] = 0.0
    Sigma[np.arange(b), sources] = 1.0
    frontier[np.arange(b), sources] = True
    level = 0
    while frontier.any():
        counts = (AT @ (Sigma * frontier).T).T
        level += 1
        new_frontier = (counts > 0) & np.isinf(D)
        D[new_frontier] = level
        Sigma[new_frontier] = counts[new_frontier]
        frontier = new_frontier
    return D, Sigma


def _betweenness_weighted_block(arc_src, arc_dst, arc_w, D, sources, n):
    """Brandes accumulation on Dijkstra shortest-path DAGs, one source a row.

    Shortest-path DAG membership is decided with a small relative
    tolerance so that equal-length paths assembled in different float
    orders still count.
    """
    totals = np.zeros(n)
    for row, s in enumerate(sources):
        dist = D[row]
        finite = np.isfinite(dist)
        if finite.sum() <= 1:
            continue
        with np.errstate(invalid="ignore"):  # inf - inf on unreachable arcs
            slack = np.abs(dist[arc_src] + arc_w - dist[arc_dst])
            on_dag = (
                finite[arc_src]
                & finite[arc_dst]
                & (slack <= 1e-12 * np.maximum(1.0, np.abs(dist[arc_dst])))
            )
        if not on_dag.any():
            continue
        e_src = arc_src[on_dag]
        e_dst = arc_dst[on_dag]
        # rank nodes by distance; DAG edges always go strictly rank-upward
        values = np.unique(dist[finite])
        rank = np.full(n, -1)
        rank[finite] = np.searchsorted(values, dist[finite])
        sigma = np.zeros(n)
        sigma[s] = 1.0
        order = np.argsort(rank[e_dst], kind="stable")
        fwd_src, fwd_dst = e_src[order], e_dst[order]
        bounds = np.searchsorted(rank[fwd_dst], np.arange(len(values) + 1))
        for r in range(len(values)):
            lo, hi = bounds[r], bounds[r + 1]
            if lo < hi:
                np.add.at(sigma, fwd_dst[lo:hi], sigma[fwd_src[lo:hi]])
        delta = np.zeros(n)
        order = np.argsort(rank[e_src], kind="stable")
        bwd_src, bwd_dst = e_src[order], e_dst[order]
        src_bounds = np.searchsorted(rank[bwd_src], np.arange(len(values) + 1))
        for r in range(len(values) - 1, -1, -1):
            lo, hi = src_bounds[r], src_bounds[r + 1]
            if lo < hi:
                contrib = (
                    sigma[bwd_src[lo:hi]]
                    / sigma[bwd_dst[lo:hi]]
                    * (1.0 + delta[bwd_dst[lo:hi]])
                )
                np.add.at(delta, bwd_src[lo:hi], contrib)
        delta[s] = 0.0
        totals += delta
    return totals


def betweenness(
    net, interpretation: str = "directed", weighted: bool = True
) -> CentralityResult:
    """Fraction-of-shortest-paths betweenness, endpoints excluded.

    Weights act as distances; self-loops never lie on a shortest path
    and are ignored.
    """
    variant = f"{interpretation}_{'weighted' if weighted else 'unweighted'}"
    g = _Indexed(net)
    n = g.n
    if n == 0:
        return g.result([], "betweenness", variant)
    A = g.adjacency(interpretation, weighted, loops=False)
    AT = A.T.tocsr()
    totals = np.zeros(n)
    if weighted:
        coo = A.tocoo()
        arc_src, arc_dst, arc_w = coo.row, coo.col, coo.data
    for start in range(0, n, _SOURCE_BLOCK):
        sources = np.arange(start, min(start + _SOURCE_BLOCK, n))
        if weighted:
            D = dijkstra(A, directed=True, indices=sources)
            totals += _betweenness_weighted_block(arc_src, arc_dst, arc_w, D, sources, n)
        else:
            D, Sigma = _bfs_counts_block(A, AT, sources, n)
            Delta = _brandes_unweighted_block(A, AT, D, Sigma)
            Delta[np.arange(len(sources)), sources] = 0.0
            totals += Delta.sum(axis=0)
    if interpretation == "undirected":
        totals /= 2.0  # each unordered pair was counted from both ends
    return g.result(totals, "betweenness", variant)


def closeness(net, mode: str = "all", weighted: bool = True) -> CentralityResult:
    """Reciprocal of summed distances to all other nodes.

    Unreachable targets count distance |V|; an isolated single-node
    graph scores 0.
    """
    _require_mode(net, mode)
    g = _Indexed(net)
    variant = f"{'weighted' if weighted else 'unweighted'}_{mode}"
    n = g.n
    if n == 0:
        return g.result([], "closeness", variant)
    if n == 1:
        return g.result([0.0], "closeness", variant)
    if mode == "all":
        A = g.adjacency("undirected", weighted, loops=False)
    else:
        A = g.adjacency("directed", weighted, loops=False)
    out_sums = np.zeros(n)
    in_sums = np.zeros(n)
    for start in range(0, n, _SOURCE_BLOCK):
        sources = np.arange(start, min(start + _SOURCE_BLOCK, n))
        D = _distance_blocks(A, weighted, sources)
        D[np.isinf(D)] = float(n)
        out_sums[sources] += D.sum(axis=1)
        in_sums += D.sum(axis=0)
    sums = in_sums if mode == "in" else out_sums
    # either marginal already excludes d(v, v) = 0
    values = np.where(sums > 0, 1.0 / np.where(sums > 0, sums, 1.0), 0.0)
    return g.result(values, "closeness", variant)


# -- the measure/variant catalog ----------------------------------------------

#: Measure catalog: name -> variants on directed networks / undirected networks.
MEASURE_CATALOG: list[dict] = [
    {"measure": "degree", "directed": list(MODES), "undirected": ["all"]},
    {"measure": "strength", "directed": list(MODES), "undirected": ["all"]},
    {"measure": "neighborhood_size", "directed": list(MODES), "undirected": ["all"]},
    {"measure": "coreness", "directed": list(MODES), "undirected": ["all"]},
    {
        "measure": "clustering_coefficient",
        "directed": ["weighted", "unweighted"],
        "undirected": ["weighted", "unweighted"],
    },
    {"measure": "structural_diversity", "directed": ["na"], "undirected": ["na"]},
    {
        "measure": "pagerank",
        "directed": list(INTERPRETATIONS),
        "undirected": ["undirected_weighted", "undirected_unweighted"],
    },
    {
        "measure": "hub",
        "directed": ["weighted", "unweighted"],
        "undirected": ["weighted", "unweighted"],
    },
    {
        "measure": "authority",
        "directed": ["weighted", "unweighted"],
        "undirected": ["weighted", "unweighted"],
    },
    {
        "measure": "betweenness",
        "directed": list(INTERPRETATIONS),
        "undirected": ["undirected_weighted", "undirected_unweighted"],
    },
    {
        "measure": "closeness",
        "directed": [f"{kind}_{mode}" for kind in ("weighted", "unweighted") for mode in MODES],
        "undirected": ["weighted_all", "unweighted_all"],
    },
    {
        "measure": "eigenvector",
        "directed": list(INTERPRETATIONS),
        "undirected": ["undirected_weighted", "undirected_unweighted"],
    },
]


def variant_catalog(directed: bool) -> list[tuple[str, str]]:
    """All applicable (measure, variant) pairs for a network orientation."""
    kind = "directed" if directed else "undirected"
    return [
        (row["measure"], variant)
        for row in MEASURE_CATALOG
        for variant in row[kind]
    ]


def compute(
    net, measure: str, variant: str, cfg: DampingConfig | None = None
) -> CentralityResult:
    """Compute a single (measure, variant) combination on a network."""
    if measure == "degree":
        return degree(net, variant)
    if measure == "strength":
        return strength(net, variant)
    if measure == "neighborhood_size":
        return neighborhood_size(net, variant)
    if measure == "coreness":
        return coreness(net, variant)
    if measure == "clustering_coefficient":
        if variant not in ("weighted", "unweighted"):
            raise ValueError(f"unknown clustering variant {variant!r}")
        return clustering_coefficient(net, weighted=variant == "weighted")
    if measure == "structural_diversity":
        return structural_diversity(net)
    if measure == "pagerank":
        interpretation, weighted = _split_interpretation(variant)
        return pagerank(net, interpretation, weighted, cfg)
    if measure in ("hub", "authority"):
        if variant not in ("weighted", "unweighted"):
            raise ValueError(f"unknown hits variant {variant!r}")
        hub_result, auth_result = hits(net, weighted=variant == "weighted")
        return hub_result if measure == "hub" else auth_result
    if measure == "betweenness":
        interpretation, weighted = _split_interpretation(variant)
        return betweenness(net, interpretation, weighted)
    if measure == "closeness":
        kind, _, mode = variant.partition("_")
        if kind not in ("weighted", "unweighted") or mode not in MODES:
            raise ValueError(f"unknown closeness variant {variant!r}")
        return closeness(net, mode, weighted=kind == "weighted")
    if measure == "eigenvector":
        interpretation, weighted = _split_interpretation(variant)
        return eigenvector(net, interpretation, weighted)
    raise ValueError(f"unknown measure {measure!r}")


def compute_all(
    net, cfg: DampingConfig | None = None
) -> tuple[list[CentralityResult], dict[str, str]]:
    """Every applicable (measure, variant) on the network.

    Per-combination failures (e.g. non-convergence) are collected into
    the returned error map instead of aborting the batch.  Empty
    networks yield an empty result list.
    """
    if net.node_count == 0:
        return [], {}
    results: list[CentralityResult] = []
    errors: dict[str, str] = {}
    computed_hits: dict[str, tuple[CentralityResult, CentralityResult]] = {}
    for measure, variant in variant_catalog(net.directed):
        try:
            if measure in ("hub", "authority"):
                # hits() yields both sides at once; compute each variant once
                if variant not in computed_hits:
                    computed_hits[variant] = hits(net, weighted=variant == "weighted")
                pair = computed_hits[variant]
                results.append(pair[0] if measure == "hub" else pair[1])
            else:
                results.append(compute(net, measure, variant, cfg))
        except (ConvergenceError, ValueError) as exc:
            errors[f"{measure}.{variant}"] = str(exc)
    return results, errors
