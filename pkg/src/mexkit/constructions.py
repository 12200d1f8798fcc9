"""Builders for the named extremal graphs.

All constructions use one shared labeling convention: vertex v belongs to
part ((v - 1) mod r) + 1.  Under that convention the balanced complete
multipartite graph on [n] is literally the subgraph of the colex Turan
graph spanned by [n], which makes the isomorphism checks in the tests
plain equality on the non-isolated part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colex import colex_unrank, rpartite_valid
from .graphs import Graph, _bits, graph_from_edges

__all__ = [
    "GadgetParams",
    "TuranSpec",
    "blowup",
    "colex_graph",
    "colex_turan_graph",
    "complete_graph",
    "critical_edge_gadget",
    "critical_edge_gadget_params",
    "turan_graph",
    "turan_number",
]


@dataclass(frozen=True)
class TuranSpec:
    """Parameters of a balanced complete r-partite graph on n vertices."""

    r: int
    n: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.n < 0:
            raise ValueError("n must be nonnegative")

    @property
    def part_sizes(self) -> tuple[int, ...]:
        """Sizes by residue class; they differ by at most 1 and sum to n."""
        return tuple((self.n - i + self.r - 1) // self.r for i in range(self.r))

    @property
    def edge_count(self) -> int:
        sizes = self.part_sizes
        return (self.n * self.n - sum(s * s for s in sizes)) // 2


def turan_graph(r: int, n: int) -> Graph:
    """Complete r-partite graph on [n], parts assigned by residue class."""
    spec = TuranSpec(r, n)
    adj = [0] * (n + 1)
    for v in range(1, n + 1):
        for u in range(1, v):
            if (u - 1) % r != (v - 1) % r:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    assert sum(m.bit_count() for m in adj) // 2 == spec.edge_count
    return Graph(n, tuple(adj))


def turan_number(r: int, n: int) -> int:
    """Edge count of the balanced complete r-partite graph on n vertices."""
    return TuranSpec(r, n).edge_count


def complete_graph(n: int) -> Graph:
    return turan_graph(max(n, 1), n)


def colex_graph(m: int) -> Graph:
    """Graph whose edges are the first m 2-sets in colex order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return graph_from_edges([colex_unrank(i, 2) for i in range(m)])


def colex_turan_graph(r: int, m: int) -> Graph:
    """Graph whose edges are the first m 2-sets in r-partite colex order."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if m < 0:
        raise ValueError("m must be nonnegative")
    edges = []
    rank = 0
    while len(edges) < m:
        pair = colex_unrank(rank, 2)
        if rpartite_valid(pair, r):
            edges.append(pair)
        rank += 1
    return graph_from_edges(edges)


def blowup(g: Graph, t: int) -> Graph:
    """t-fold blowup: each vertex becomes an independent t-set, each edge a t-by-t join.

    Copy j of vertex v gets label (v - 1) * t + j, so outputs are
    reproducible bit for bit.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    n = g.vertex_count * t
    adj = [0] * (n + 1)
    for v in g.vertices():
        vmask = 0
        for u in _bits(g.adjacency[v]):
            lo = (u - 1) * t + 1
            vmask |= ((1 << t) - 1) << lo
        for j in range(1, t + 1):
            adj[(v - 1) * t + j] = vmask
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class GadgetParams:
    """Structural parameters of the critical-edge gadget for (r, m).

    host_order is the least n with m <= t_r(n); the gadget is the
    balanced graph on n - 1 vertices plus an apex joined to attach_count
    of them.  attach_count is reported so callers can compare it against
    the minimum degree of whatever forbidden graph they have in mind.
    """

    r: int
    m: int
    host_order: int
    attach_count: int


def critical_edge_gadget_params(r: int, m: int) -> GadgetParams:
    if r < 2:
        raise ValueError("r must be at least 2")
    if m < 1:
        raise ValueError("no attachment is possible for m < 1")
    n = 1
    while turan_number(r, n) < m:
        n += 1
    q = m - turan_number(r, n - 1)
    if not 1 <= q <= n - 1:
        raise ValueError(f"impossible attachment for r={r}, m={m}")
    return GadgetParams(r, m, n, q)


def critical_edge_gadget(r: int, m: int) -> Graph:
    """Balanced r-partite graph plus an apex vertex, m edges in total.

    The apex v* = n is joined to the attach_count lowest-labeled vertices,
    which under the residue labeling distributes its neighbors round-robin
    across the r parts, as evenly as possible.
    """
    params = critical_edge_gadget_params(r, m)
    n = params.host_order
    base = turan_graph(r, n - 1)
    adj = list(base.adjacency) + [0]
    for u in range(1, params.attach_count + 1):
        adj[u] |= 1 << n
        adj[n] |= 1 << u
    return Graph(n, tuple(adj))
