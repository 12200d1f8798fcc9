"""Immutable bitset-adjacency graphs and exact clique counting.

Vertices are labeled 1..vertex_count.  Each neighbor set is an integer
bitmask (bit v of adjacency[u] is set iff {u, v} is an edge), so the
neighborhood intersections inside the counting recursion are single
arbitrary-width integer operations.  All counts are plain Python
integers and cannot overflow.  Graph values are immutable and every
operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "CliqueProfile",
    "Graph",
    "clique_profile",
    "cliques_at_edge",
    "cliques_at_vertex",
    "contains_clique",
    "contains_subgraph",
    "count_cliques",
    "format_edge_list",
    "graph_from_edges",
    "min_clique_degrees",
    "non_isolated_subgraph",
    "parse_edge_list",
]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 1..vertex_count.

    adjacency[v] is the neighbor bitmask of v; index 0 is unused padding.
    The stored adjacency is symmetric and irreflexive by construction.
    """

    vertex_count: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be nonnegative")
        if len(self.adjacency) != n + 1 or self.adjacency[0] != 0:
            raise ValueError("adjacency must have one mask per vertex 1..n")
        valid = ((1 << (n + 1)) - 1) & ~1
        for v in range(1, n + 1):
            mask = self.adjacency[v]
            if mask & ~valid:
                raise ValueError(f"neighbor of {v} out of range")
            if mask >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in _bits(mask):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at {{{u}, {v}}}")

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def neighbor_mask(self, v: int) -> int:
        if not 1 <= v <= self.vertex_count:
            raise ValueError(f"vertex {v} not in 1..{self.vertex_count}")
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.neighbor_mask(u) >> v & 1) if 1 <= v <= self.vertex_count else False

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in colex order."""
        for v in self.vertices():
            below = self.adjacency[v] & ((1 << v) - 1)
            for u in _bits(below):
                yield (u, v)

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices() if self.adjacency[v] == 0]


@dataclass(frozen=True)
class CliqueProfile:
    """Clique counts (c_1, ..., c_omega); c_t is the number of t-cliques.

    Entries stop at the clique number, so every stored count is positive.
    """

    counts: tuple[int, ...]

    @property
    def omega(self) -> int:
        return len(self.counts)


def graph_from_edges(
    edges: Iterable[Iterable[int]], explicit_vertex_count: int | None = None
) -> Graph:
    """Build a graph from unordered vertex pairs.

    Self-loops and duplicate pairs are rejected outright so that oracle
    enumeration counts stay exact.  explicit_vertex_count pads with
    isolated vertices (it must cover every endpoint).
    """
    pairs = []
    seen: set[tuple[int, int]] = set()
    top = 0
    for raw in edges:
        pair = tuple(raw)
        if len(pair) != 2:
            raise ValueError(f"not a vertex pair: {raw!r}")
        u, v = pair
        if not (isinstance(u, int) and isinstance(v, int)) or u < 1 or v < 1:
            raise ValueError(f"endpoints must be positive integers: {raw!r}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {{{key[0]}, {key[1]}}}")
        seen.add(key)
        pairs.append(key)
        top = max(top, key[1])
    n = top
    if explicit_vertex_count is not None:
        if explicit_vertex_count < top:
            raise ValueError(
                f"explicit_vertex_count {explicit_vertex_count} below max endpoint {top}"
            )
        n = explicit_vertex_count
    adj = [0] * (n + 1)
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@lru_cache(maxsize=512)
def _degeneracy_successors(g: Graph) -> tuple[int, ...]:
    """Per-vertex mask of neighbors that come later in a degeneracy order.

    The order repeatedly removes a minimum-degree vertex (ties broken by
    label), which keeps the branching factor of the counting recursion at
    the graph's degeneracy.
    """
    n = g.vertex_count
    deg = [m.bit_count() for m in g.adjacency]
    alive = [True] * (n + 1)
    order = []
    for _ in range(n):
        v = min((u for u in range(1, n + 1) if alive[u]), key=lambda u: (deg[u], u))
        order.append(v)
        alive[v] = False
        for u in _bits(g.adjacency[v]):
            if alive[u]:
                deg[u] -= 1
    succ = [0] * (n + 1)
    later = 0
    for v in reversed(order):
        succ[v] = g.adjacency[v] & later
        later |= 1 << v
    return tuple(succ)


def _count_from(succ: tuple[int, ...], cand: int, depth: int) -> int:
    """Number of depth-cliques inside the candidate mask (all mutually adjacent to the partial clique)."""
    if depth == 1:
        return cand.bit_count()
    total = 0
    rest = cand
    while rest:
        low = rest & -rest
        rest ^= low
        total += _count_from(succ, cand & succ[low.bit_length() - 1], depth - 1)
    return total


def count_cliques(g: Graph, t: int) -> int:
    """Exact number of t-vertex cliques in g, counted as vertex subsets."""
    if t < 1:
        raise ValueError("clique order must be at least 1")
    if t == 1:
        return g.vertex_count
    if t == 2:
        return g.edge_count
    succ = _degeneracy_successors(g)
    return sum(_count_from(succ, succ[v], t - 1) for v in g.vertices())


def _cliques_within(g: Graph, mask: int, q: int) -> int:
    """q-cliques of g whose vertices all lie inside mask."""
    if q == 0:
        return 1
    if q == 1:
        return mask.bit_count()
    succ = _degeneracy_successors(g)
    return sum(_count_from(succ, mask & succ[v], q - 1) for v in _bits(mask))


def _mask_cliques_within(adj: list[int] | tuple[int, ...], mask: int, q: int) -> int:
    """q-cliques inside mask over a raw adjacency list (label-order recursion).

    Works on mutable adjacency lists mid-edit, unlike the cached
    degeneracy path above.
    """
    if q == 0:
        return 1
    if q == 1:
        return mask.bit_count()
    total = 0
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        u = low.bit_length() - 1
        total += _mask_cliques_within(adj, mask & adj[u] & ~((1 << (u + 1)) - 1), q - 1)
    return total


def cliques_at_vertex(g: Graph, v: int, s: int) -> int:
    """Number of s-cliques of g containing vertex v.

    Equals the (s-1)-clique count of the subgraph induced on N(v).
    """
    if s < 1:
        raise ValueError("clique order must be at least 1")
    return _cliques_within(g, g.neighbor_mask(v), s - 1)


def cliques_at_edge(g: Graph, e: tuple[int, int], s: int) -> int:
    """Number of s-cliques of g containing the edge e.

    Equals the (s-2)-clique count inside the common neighborhood.
    """
    if s < 2:
        raise ValueError("clique order must be at least 2 for an edge count")
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{{{u}, {v}}} is not an edge")
    return _cliques_within(g, g.adjacency[u] & g.adjacency[v], s - 2)


def min_clique_degrees(g: Graph, s: int) -> tuple[int | None, int | None]:
    """Minimum per-vertex and per-edge s-clique counts.

    Returns (min over vertices, min over edges); a slot is None when the
    graph has no vertices (resp. no edges) to minimize over.
    """
    if s < 2:
        raise ValueError("clique order must be at least 2")
    delta = min(
        (cliques_at_vertex(g, v, s) for v in g.vertices()), default=None
    )
    delta_edge = min(
        (cliques_at_edge(g, e, s) for e in g.edges()), default=None
    )
    return (delta, delta_edge)


def clique_profile(g: Graph) -> CliqueProfile:
    """Counts of t-cliques for t = 1 up to the clique number."""
    counts = []
    t = 1
    while True:
        c = count_cliques(g, t)
        if c == 0:
            break
        counts.append(c)
        t += 1
    return CliqueProfile(tuple(counts))


def contains_clique(g: Graph, k: int) -> bool:
    """True iff g has a k-clique; early-exits as soon as one is found."""
    if k < 1:
        raise ValueError("clique order must be at least 1")
    if k == 1:
        return g.vertex_count >= 1
    if k == 2:
        return any(m for m in g.adjacency)
    succ = _degeneracy_successors(g)

    def probe(cand: int, depth: int) -> bool:
        if depth == 1:
            return cand != 0
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            if probe(cand & succ[low.bit_length() - 1], depth - 1):
                return True
        return False

    return any(probe(succ[v], k - 1) for v in g.vertices())


def contains_subgraph(g: Graph, f: Graph) -> bool:
    """True iff g contains a (not necessarily induced) copy of f.

    Isolated vertices of f only require g to have at least as many
    vertices in total; the non-isolated part is embedded by backtracking.
    """
    if f.vertex_count > g.vertex_count:
        return False
    pattern = [v for v in f.vertices() if f.adjacency[v]]
    if not pattern:
        return True

    # Order pattern vertices so each (after the first of its component)
    # has an already-placed neighbor, which keeps candidate sets tight.
    order: list[int] = []
    placed = set()
    while len(order) < len(pattern):
        seed = max(
            (v for v in pattern if v not in placed), key=lambda v: f.degree(v)
        )
        queue = [seed]
        placed.add(seed)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(_bits(f.adjacency[v]), key=lambda u: -f.degree(u)):
                if u not in placed:
                    placed.add(u)
                    queue.append(u)

    fdeg = {v: f.degree(v) for v in pattern}
    all_mask = ((1 << (g.vertex_count + 1)) - 1) & ~1
    images: dict[int, int] = {}

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        fv = order[i]
        cand = all_mask & ~used
        for fu in _bits(f.adjacency[fv]):
            if fu in images:
                cand &= g.adjacency[images[fu]]
        for gv in _bits(cand):
            if g.adjacency[gv].bit_count() < fdeg[fv]:
                continue
            images[fv] = gv
            if extend(i + 1, used | (1 << gv)):
                return True
            del images[fv]
        return False

    return extend(0, 0)


def non_isolated_subgraph(g: Graph) -> Graph:
    """Induced subgraph on the non-isolated vertices, relabeled 1..k in label order."""
    keep = [v for v in g.vertices() if g.adjacency[v]]
    relabel = {v: i + 1 for i, v in enumerate(keep)}
    adj = [0] * (len(keep) + 1)
    for v in keep:
        for u in _bits(g.adjacency[v]):
            adj[relabel[v]] |= 1 << relabel[u]
    return Graph(len(keep), tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    One edge per line as two positive integers; an optional leading
    header ``n <vertex_count>``; blank lines and ``#`` comments ignored.
    """
    explicit: int | None = None
    edges: list[tuple[int, int]] = []
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not saw_content and tokens[0] == "n":
            if len(tokens) != 2:
                raise ValueError(f"line {lineno}: malformed header {raw!r}")
            explicit = int(tokens[1])
            saw_content = True
            continue
        saw_content = True
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected two endpoints, got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer endpoint in {raw!r}") from exc
        edges.append((u, v))
    return graph_from_edges(edges, explicit)


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format (colex edge order).

    The ``n`` header is emitted only when needed to preserve isolated
    vertices, so the output round-trips through parse_edge_list.
    """
    lines = []
    top = 0
    for u, v in g.edges():
        lines.append(f"{u} {v}")
        top = v
    if g.vertex_count != top:
        lines.insert(0, f"n {g.vertex_count}")
    return "\n".join(lines) + ("\n" if lines else "")
