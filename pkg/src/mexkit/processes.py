"""Threshold-driven deletion procedures with full, replayable traces.

The edge process repeatedly removes an edge lying in few s-cliques
relative to the current edge count; the vertex process removes low-degree
vertices against a square-root threshold, stopping exactly at an edge
budget (trimming the final vertex partially if needed).  Both are
deterministic: among qualifying items the one of minimum value is
removed, ties broken by colex order (edges) or smallest label (vertices).
Deleted vertices remain as isolated placeholders so labels stay stable
and traces replay exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import factorial

from .extremal import beta, c_rs, mex_clique
from .graphs import Graph, _bits, _mask_cliques_within, contains_clique, count_cliques
from .oracle import min_edits_to_r_partite

__all__ = [
    "PartialVertex",
    "ProcessConfig",
    "ProcessStep",
    "ProcessTrace",
    "ProofConstants",
    "StabilityReport",
    "default_edge_config",
    "default_vertex_config",
    "edge_deletion_process",
    "proof_constants",
    "replay_trace",
    "stability_experiment",
    "vertex_deletion_process",
]


@dataclass(frozen=True)
class ProcessConfig:
    """Parameters of one deletion run.

    A step deletes an item whose value (edge s-clique count, or vertex
    degree) is strictly below coefficient * (current edge count)**exponent.
    edge_budget bounds the total number of edges removed.
    """

    mode: str
    s: int
    r: int
    epsilon: float
    coefficient: float
    exponent: float
    edge_budget: int

    def __post_init__(self) -> None:
        if self.mode not in ("edge", "vertex"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.s < 2 or self.r < 2:
            raise ValueError("need s >= 2 and r >= 2")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.coefficient <= 0.0:
            raise ValueError("coefficient must be positive")
        if self.edge_budget < 0:
            raise ValueError("edge_budget must be nonnegative")


@dataclass(frozen=True)
class ProofConstants:
    """Derived threshold constants, all computed from (r, s, epsilon).

    rho is the default fraction of edges the edge process may delete; its
    admissible interval is open, so the default sits at the midpoint of
    the positive part.  delta is the clique-count slack under which the
    vertex process is guaranteed to stop early; epsilon_prime rescales
    the tolerance for the r-partite edit bound; alpha and eta cascade the
    same quantities once more for the general forbidden-graph variant
    (delta re-derived at epsilon/2 through the rescaled tolerance).
    """

    rho_lower: float
    rho: float
    delta: float
    epsilon_prime: float
    alpha: float
    eta: float


def proof_constants(r: int, s: int, epsilon: float) -> ProofConstants:
    if r < 2 or s < 3:
        raise ValueError("need r >= 2 and s >= 3")
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")
    c = c_rs(r, s).float_value
    rho_lower = 1.0 - (factorial(s) / 2 ** (s / 2) * (c + epsilon / 3)) ** (2 / s)
    rho = (max(rho_lower, 0.0) + 1.0) / 2.0
    delta = s * (s - 2) * c * epsilon**2 / 16
    epsilon_prime = epsilon / (16 * r + 1)
    delta_prime = s * (s - 2) * c * ((epsilon / 2) / (16 * r + 1)) ** 2 / 16
    alpha = min(epsilon**2, delta_prime / (5 * 2 ** ((s + 2) / 2)))
    eta = epsilon**2 * alpha
    return ProofConstants(rho_lower, rho, delta, epsilon_prime, alpha, eta)


def default_edge_config(g: Graph, s: int, r: int, epsilon: float) -> ProcessConfig:
    """Edge-mode defaults: threshold 2^(s-2) eps^(2s-4)/(s-2)! * m^((s-2)/2), budget floor(rho*m)."""
    if s < 3:
        raise ValueError("edge mode defaults need s >= 3")
    coeff = 2 ** (s - 2) * epsilon ** (2 * s - 4) / factorial(s - 2)
    budget = math.floor(proof_constants(r, s, epsilon).rho * g.edge_count)
    return ProcessConfig("edge", s, r, epsilon, coeff, (s - 2) / 2, budget)


def default_vertex_config(g: Graph, s: int, r: int, epsilon: float) -> ProcessConfig:
    """Vertex-mode defaults: threshold beta_r (1-2 eps) sqrt(m), budget floor(eps*m)."""
    if not 0.0 < epsilon < 0.5:
        raise ValueError("vertex mode defaults need epsilon in (0, 0.5)")
    coeff = beta(r).float_value * (1.0 - 2.0 * epsilon)
    return ProcessConfig(
        "vertex", s, r, epsilon, coeff, 0.5, math.floor(epsilon * g.edge_count)
    )


@dataclass(frozen=True)
class ProcessStep:
    kind: str
    item: tuple[int, int] | int
    value: int
    edges_after: int


@dataclass(frozen=True)
class PartialVertex:
    vertex: int
    removed_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ProcessTrace:
    """Step-by-step record of one deletion run.

    budget_exhausted is set when the budget (not the threshold) stopped
    the run.  In vertex mode, a qualifying final vertex that the budget
    cannot fully cover is spared and recorded in partial_last_vertex with
    the edges (possibly none) trimmed off it; consequently every
    surviving vertex meets the degree threshold unless
    partial_last_vertex is set.
    """

    steps: tuple[ProcessStep, ...]
    final_graph: Graph
    budget_exhausted: bool
    partial_last_vertex: PartialVertex | None


def _edges_colex(adj: list[int], n: int):
    for v in range(1, n + 1):
        below = adj[v] & ((1 << v) - 1)
        for u in _bits(below):
            yield (u, v)


def edge_deletion_process(g: Graph, config: ProcessConfig) -> ProcessTrace:
    """Repeatedly delete a qualifying minimum-value edge until none is left or the budget runs out."""
    if config.mode != "edge":
        raise ValueError("config.mode must be 'edge'")
    if config.edge_budget > g.edge_count:
        raise ValueError("edge_budget exceeds the edge count")
    n = g.vertex_count
    adj = list(g.adjacency)
    m_cur = g.edge_count
    s = config.s
    steps: list[ProcessStep] = []

    def best_qualifying() -> tuple[tuple[int, int], int] | None:
        threshold = config.coefficient * m_cur**config.exponent
        best = None
        for u, v in _edges_colex(adj, n):
            val = _mask_cliques_within(adj, adj[u] & adj[v], s - 2)
            if val < threshold and (best is None or val < best[1]):
                best = ((u, v), val)
        return best

    while len(steps) < config.edge_budget:
        pick = best_qualifying()
        if pick is None:
            return ProcessTrace(tuple(steps), Graph(n, tuple(adj)), False, None)
        (u, v), val = pick
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        m_cur -= 1
        steps.append(ProcessStep("edge", (u, v), val, m_cur))
    exhausted = best_qualifying() is not None
    return ProcessTrace(tuple(steps), Graph(n, tuple(adj)), exhausted, None)


def vertex_deletion_process(g: Graph, config: ProcessConfig) -> ProcessTrace:
    """Repeatedly delete a qualifying minimum-degree vertex, stopping exactly at the edge budget."""
    if config.mode != "vertex":
        raise ValueError("config.mode must be 'vertex'")
    if config.edge_budget > g.edge_count:
        raise ValueError("edge_budget exceeds the edge count")
    n = g.vertex_count
    adj = list(g.adjacency)
    m_cur = g.edge_count
    steps: list[ProcessStep] = []
    removed_mask = 0
    deleted_edges = 0

    def pick_vertex() -> int | None:
        threshold = config.coefficient * m_cur**config.exponent
        best = None
        for v in range(1, n + 1):
            if removed_mask >> v & 1:
                continue
            d = adj[v].bit_count()
            if d < threshold and (best is None or d < best[1]):
                best = (v, d)
        return best[0] if best is not None else None

    if config.edge_budget == 0:
        spared = pick_vertex()
        partial = PartialVertex(spared, ()) if spared is not None else None
        return ProcessTrace((), g, spared is not None, partial)

    while True:
        v = pick_vertex()
        if v is None:
            return ProcessTrace(tuple(steps), Graph(n, tuple(adj)), False, None)
        d = adj[v].bit_count()
        if deleted_edges + d > config.edge_budget:
            # spare the final vertex, trimming just enough of its edges
            # (possibly none) to land exactly on the budget
            allowed = config.edge_budget - deleted_edges
            trimmed = []
            for u in _bits(adj[v]):
                if len(trimmed) == allowed:
                    break
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                trimmed.append((min(u, v), max(u, v)))
            return ProcessTrace(
                tuple(steps),
                Graph(n, tuple(adj)),
                True,
                PartialVertex(v, tuple(trimmed)),
            )
        for u in _bits(adj[v]):
            adj[u] &= ~(1 << v)
        adj[v] = 0
        removed_mask |= 1 << v
        m_cur -= d
        deleted_edges += d
        steps.append(ProcessStep("vertex", v, d, m_cur))


def replay_trace(g: Graph, trace: ProcessTrace) -> Graph:
    """Apply a trace's deletions to the input graph; must reproduce final_graph."""
    adj = list(g.adjacency)
    for step in trace.steps:
        if step.kind == "edge":
            u, v = step.item
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        else:
            v = step.item
            for u in _bits(adj[v]):
                adj[u] &= ~(1 << v)
            adj[v] = 0
    if trace.partial_last_vertex is not None:
        for u, v in trace.partial_last_vertex.removed_edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
    return Graph(g.vertex_count, tuple(adj))


@dataclass(frozen=True)
class StabilityReport:
    """Measurements relating a graph's clique count to the extremal value.

    No conclusion is asserted: the report records the exact counts, the
    exact minimum edit distance to r-partite, and whether the surviving
    graph of a default vertex-trimming run meets the two minimum-degree
    bounds (against sqrt of its edge count, and against its order).
    input_clique_free records whether the input actually avoids K_{r+1};
    the report is produced either way.
    """

    input_clique_free: bool
    clique_count: int
    extremal_value: int
    ratio: float | None
    edits_to_partite: int
    edits_within_epsilon: bool
    trimmed_edge_count: int
    trimmed_vertex_count: int
    trimmed_min_degree: int | None
    meets_sqrt_degree_bound: bool | None
    meets_order_degree_bound: bool | None
    partial_trim: bool


def stability_experiment(g: Graph, r: int, s: int, epsilon: float) -> StabilityReport:
    """Measure how close a K_{r+1}-free graph is to extremal and to r-partite.

    Inputs containing a K_{r+1} still get a report (flagged via
    input_clique_free); nothing is asserted about them.
    """
    m = g.edge_count
    kappa = count_cliques(g, s)
    extremal_value = mex_clique(m, s, r)
    ratio = kappa / extremal_value if extremal_value else None
    edits = min_edits_to_r_partite(g, r)
    config = default_vertex_config(g, s, r, epsilon)
    trace = vertex_deletion_process(g, config)
    removed = {step.item for step in trace.steps}
    survivors = [v for v in g.vertices() if v not in removed]
    final = trace.final_graph
    m_final = final.edge_count
    if survivors:
        min_deg = min(final.degree(v) for v in survivors)
        sqrt_ok = min_deg >= config.coefficient * math.sqrt(m_final)
        order_ok = min_deg >= ((r - 1) / r - 4 * epsilon) * len(survivors)
    else:
        min_deg = None
        sqrt_ok = None
        order_ok = None
    return StabilityReport(
        input_clique_free=not contains_clique(g, r + 1),
        clique_count=kappa,
        extremal_value=extremal_value,
        ratio=ratio,
        edits_to_partite=edits,
        edits_within_epsilon=edits <= epsilon * m,
        trimmed_edge_count=m_final,
        trimmed_vertex_count=len(survivors),
        trimmed_min_degree=min_deg,
        meets_sqrt_degree_bound=sqrt_ok,
        meets_order_degree_bound=order_ok,
        partial_trim=trace.partial_last_vertex is not None,
    )
