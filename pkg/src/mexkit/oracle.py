"""Exhaustive brute-force search engines for desk-scale verification.

Everything here is exact and deterministic: graphs are enumerated up to
isomorphism via canonical forms, optima are computed by full scans, and
safety caps guard every search whose space is super-exponential.  The
caps raise CapExceededError; pass cap=None (CLI: MEXKIT_CAP_OVERRIDE=1)
to override them deliberately.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterator

from .graphs import Graph, _bits, contains_clique, contains_subgraph, count_cliques

__all__ = [
    "CapExceededError",
    "DEFAULT_EDGE_CAP",
    "DEFAULT_FAMILY_CAP",
    "DEFAULT_PARTITION_CAP",
    "DEFAULT_VERTEX_CAP",
    "DEFAULT_WITNESS_LIMIT",
    "SearchResult",
    "brute_force_ex",
    "brute_force_mex",
    "brute_force_min_shadow",
    "canonical_form",
    "canonical_graph",
    "enumerate_graphs",
    "find_blowup",
    "min_edits_to_r_partite",
]

DEFAULT_EDGE_CAP = 10
DEFAULT_VERTEX_CAP = 8
DEFAULT_FAMILY_CAP = 10**7
DEFAULT_PARTITION_CAP = 16
DEFAULT_WITNESS_LIMIT = 16
_BLOWUP_T_CAP = 3
_BLOWUP_VERTEX_CAP = 30


class CapExceededError(RuntimeError):
    """A search space exceeded its safety cap; override caps to proceed."""


def _require_cap(value: int, cap: int | None, what: str) -> None:
    if cap is not None and value > cap:
        raise CapExceededError(
            f"{what} {value} exceeds the safety cap {cap}; "
            "pass cap=None (CLI: MEXKIT_CAP_OVERRIDE=1) to override"
        )


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive search.

    witnesses holds canonical representatives of the optimum graphs,
    truncated at the configured limit; witness_count is the exact number
    of isomorphism classes attaining the optimum.
    """

    optimum: int
    witnesses: tuple[Graph, ...]
    witness_count: int
    search_space_size: int
    elapsed: float


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


def _component_vertex_lists(g: Graph) -> list[list[int]]:
    """Connected components (isolated vertices as singletons), by smallest label."""
    seen = 0
    comps = []
    for v in g.vertices():
        if seen >> v & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adjacency[u]
            frontier = nxt & ~comp
        comps.append(list(_bits(comp)))
        seen |= comp
    return comps


def _component_bits(adjacency: tuple[int, ...], verts: list[int]) -> tuple[int, ...]:
    """Lexicographically minimal adjacency bitstring over all labelings of one component.

    Bits are emitted pair-by-pair in colex order ((1,2),(1,3),(2,3),...),
    so prefixes are comparable during the branch-and-bound search.
    """
    c = len(verts)
    if c == 1:
        return ()
    best: tuple[int, ...] | None = None

    def rec(placed: tuple[int, ...], prefix: tuple[int, ...]) -> None:
        nonlocal best
        if len(placed) == c:
            if best is None or prefix < best:
                best = prefix
            return
        for v in verts:
            if v in placed:
                continue
            cand = prefix + tuple((adjacency[p] >> v) & 1 for p in placed)
            if best is not None and cand > best[: len(cand)]:
                continue
            rec(placed + (v,), cand)

    rec((), ())
    assert best is not None
    return best


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key: vertex count plus sorted component bitstrings."""
    items = sorted(
        (len(vs), _component_bits(g.adjacency, vs)) for vs in _component_vertex_lists(g)
    )
    return (g.vertex_count, tuple(items))


def _graph_from_items(n: int, items: tuple[tuple[int, tuple[int, ...]], ...]) -> Graph:
    adj = [0] * (n + 1)
    base = 0
    for size, bits in items:
        idx = 0
        for j in range(1, size):
            for i in range(j):
                if bits[idx]:
                    u, v = base + i + 1, base + j + 1
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                idx += 1
        base += size
    return Graph(n, tuple(adj))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    n, items = canonical_form(g)
    return _graph_from_items(n, items)


# ---------------------------------------------------------------------------
# enumeration up to isomorphism
# ---------------------------------------------------------------------------

_K2 = Graph(2, (0, 0b100, 0b010))
# levels[j] = sorted list of (canonical item, graph) for connected graphs with j edges
_CONNECTED_LEVELS: list[list[tuple[tuple[int, tuple[int, ...]], Graph]]] = [
    [],
    [((2, (1,)), _K2)],
]


def _with_edge(g: Graph, u: int, v: int, n: int) -> Graph:
    adj = list(g.adjacency) + [0] * (n - g.vertex_count)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _connected_upto(m: int) -> list[list[tuple[tuple[int, tuple[int, ...]], Graph]]]:
    """Connected graphs with up to m edges, one canonical representative each.

    Level j is grown from level j-1 by adding either an edge between two
    existing vertices or a pendant edge to a fresh vertex; every
    connected graph arises this way (delete a non-bridge edge, or a leaf
    edge of a tree).
    """
    while len(_CONNECTED_LEVELS) <= m:
        seen: dict[tuple, tuple[tuple[int, tuple[int, ...]], Graph]] = {}
        for _, h in _CONNECTED_LEVELS[-1]:
            n = h.vertex_count
            for v in range(2, n + 1):
                for u in range(1, v):
                    if not h.adjacency[u] >> v & 1:
                        _record_connected(seen, _with_edge(h, u, v, n))
            for u in range(1, n + 1):
                _record_connected(seen, _with_edge(h, u, n + 1, n + 1))
        _CONNECTED_LEVELS.append(sorted(seen.values(), key=lambda iv: iv[0]))
    return _CONNECTED_LEVELS


def _record_connected(seen: dict, g: Graph) -> None:
    comps = _component_vertex_lists(g)
    assert len(comps) == 1
    item = (g.vertex_count, _component_bits(g.adjacency, comps[0]))
    if item not in seen:
        seen[item] = (item, _graph_from_items(g.vertex_count, (item,)))


def enumerate_graphs(
    m: int, n_max: int | None = None, *, cap: int | None = DEFAULT_EDGE_CAP
) -> Iterator[Graph]:
    """All graphs with exactly m edges and no isolated vertices, up to isomorphism.

    Assembled as multisets of connected components; each class is yielded
    exactly once, ordered by vertex count then canonical form.  A graph
    with m edges and no isolated vertices has at most 2m vertices, so
    n_max beyond that is rejected.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    _require_cap(m, cap, "edge count")
    limit = 2 * m if n_max is None else n_max
    if limit > 2 * m:
        raise ValueError(f"n_max {limit} exceeds 2m = {2 * m}")
    levels = _connected_upto(m)
    types = [
        (j, item, g) for j in range(m, 0, -1) for item, g in levels[j]
    ]
    found: list[tuple[int, tuple, Graph]] = []

    def rec(start: int, remaining: int, vertices: int, chosen: list[int]) -> None:
        if remaining == 0:
            items = tuple(sorted(types[i][1] for i in chosen))
            n = vertices
            found.append((n, (n, items), _graph_from_items(n, items)))
            return
        for i in range(start, len(types)):
            j, _, g = types[i]
            if j > remaining or vertices + g.vertex_count > limit:
                continue
            chosen.append(i)
            rec(i, remaining - j, vertices + g.vertex_count, chosen)
            chosen.pop()

    rec(0, m, 0, [])
    found.sort(key=lambda t: (t[0], t[1]))
    for _, _, g in found:
        yield g


# ---------------------------------------------------------------------------
# brute-force extremal searches
# ---------------------------------------------------------------------------


def _clique_order(f: Graph) -> int | None:
    """k if f is the complete graph K_k, else None (enables fast freeness tests)."""
    k = f.vertex_count
    if f.edge_count == comb(k, 2) and all(
        f.adjacency[v].bit_count() == k - 1 for v in f.vertices()
    ):
        return k
    return None


def _is_free(g: Graph, forbidden: Graph, forb_k: int | None) -> bool:
    if forb_k is not None:
        return not contains_clique(g, forb_k)
    return not contains_subgraph(g, forbidden)


def _mex_chunk(payload: tuple) -> tuple[int, list[Graph], int]:
    graphs, s, forbidden, forb_k = payload
    best = -1
    attainers: list[Graph] = []
    for g in graphs:
        if not _is_free(g, forbidden, forb_k):
            continue
        val = count_cliques(g, s)
        if val > best:
            best = val
            attainers = [g]
        elif val == best:
            attainers.append(g)
    return best, attainers, len(graphs)


def brute_force_mex(
    m: int,
    s: int,
    forbidden: Graph,
    *,
    cap: int | None = DEFAULT_EDGE_CAP,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    workers: int = 1,
) -> SearchResult:
    """Exact maximum of the s-clique count over forbidden-free graphs with m edges."""
    if s < 1:
        raise ValueError("s must be at least 1")
    start = time.perf_counter()
    graphs = list(enumerate_graphs(m, cap=cap))
    forb_k = _clique_order(forbidden)
    chunks = _partition(graphs, workers)
    results = _run_chunks(
        _mex_chunk, [(chunk, s, forbidden, forb_k) for chunk in chunks], workers
    )
    best = max((b for b, _, _ in results), default=-1)
    attainers = [g for b, gs, _ in results if b == best for g in gs]
    if best < 0:
        best, attainers = 0, []
    attainers.sort(key=canonical_form)
    return SearchResult(
        optimum=best,
        witnesses=tuple(attainers[:witness_limit]),
        witness_count=len(attainers),
        search_space_size=len(graphs),
        elapsed=time.perf_counter() - start,
    )


def _mask_has_clique(start_mask: int, k: int, succ: list[int]) -> bool:
    if k == 0:
        return True
    if k == 1:
        return start_mask != 0
    rest = start_mask
    while rest:
        low = rest & -rest
        rest ^= low
        u = low.bit_length() - 1
        if _mask_has_clique(start_mask & succ[u], k - 1, succ):
            return True
    return False


def _mask_count_cliques(n: int, t: int, succ: list[int]) -> int:
    if t == 1:
        return n
    total = 0
    for v in range(1, n + 1):
        total += _mask_count(succ[v], t - 1, succ)
    return total


def _mask_count(cand: int, depth: int, succ: list[int]) -> int:
    if depth == 1:
        return cand.bit_count()
    total = 0
    rest = cand
    while rest:
        low = rest & -rest
        rest ^= low
        total += _mask_count(cand & succ[low.bit_length() - 1], depth - 1, succ)
    return total


def _ex_chunk(payload: tuple) -> tuple[int, list[int], int]:
    n, t, forbidden, forb_k, lo, hi, pairs = payload
    best = -1
    attainers: list[int] = []
    for code in range(lo, hi):
        adj = [0] * (n + 1)
        c = code
        while c:
            low = c & -c
            c ^= low
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        succ = [adj[v] & ~((1 << (v + 1)) - 1) for v in range(n + 1)]
        if forb_k is not None:
            if forb_k <= n and _mask_has_clique(
                (((1 << (n + 1)) - 1) & ~1), forb_k, succ
            ):
                continue
        else:
            if contains_subgraph(Graph(n, tuple(adj)), forbidden):
                continue
        val = code.bit_count() if t == 2 else _mask_count_cliques(n, t, succ)
        if val > best:
            best = val
            attainers = [code]
        elif val == best:
            attainers.append(code)
    return best, attainers, hi - lo


def brute_force_ex(
    n: int,
    t: int,
    forbidden: Graph,
    *,
    cap: int | None = DEFAULT_VERTEX_CAP,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    workers: int = 1,
) -> SearchResult:
    """Exact maximum of the t-clique count over forbidden-free graphs on n vertices.

    Scans every edge subset of the complete graph on n labeled vertices;
    witnesses are deduplicated by canonical form afterwards.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if t < 1:
        raise ValueError("t must be at least 1")
    _require_cap(n, cap, "vertex count")
    start = time.perf_counter()
    pairs = [(u, v) for v in range(2, n + 1) for u in range(1, v)]
    total = 1 << len(pairs)
    forb_k = _clique_order(forbidden)
    bounds = _range_blocks(total, workers)
    results = _run_chunks(
        _ex_chunk,
        [(n, t, forbidden, forb_k, lo, hi, pairs) for lo, hi in bounds],
        workers,
    )
    best = max(b for b, _, _ in results)
    codes = [c for b, cs, _ in results if b == best for c in cs]
    if best < 0:
        return SearchResult(0, (), 0, total, time.perf_counter() - start)
    witness_forms: dict[tuple, Graph] = {}
    for code in codes:
        adj = [0] * (n + 1)
        c = code
        while c:
            low = c & -c
            c ^= low
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        form = canonical_form(g)
        if form not in witness_forms:
            witness_forms[form] = _graph_from_items(form[0], form[1])
    ordered = [witness_forms[f] for f in sorted(witness_forms)]
    return SearchResult(
        optimum=best,
        witnesses=tuple(ordered[:witness_limit]),
        witness_count=len(ordered),
        search_space_size=total,
        elapsed=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# shadow minimization
# ---------------------------------------------------------------------------


def brute_force_min_shadow(
    n: int,
    k: int,
    size: int,
    p: int,
    r_colorable: int | None = None,
    *,
    cap: int | None = DEFAULT_FAMILY_CAP,
) -> int:
    """Exact minimum p-shadow size over size-element families of k-subsets of [n].

    With r_colorable set, the minimum runs over families admitting a
    partition of [n] into r parts that every member meets at most once
    (checked exhaustively over part assignments).
    """
    if not 1 <= p < k <= n:
        raise ValueError(f"need 1 <= p < k <= n, got p={p}, k={k}, n={n}")
    if not 0 <= size <= comb(n, k):
        raise ValueError(f"size must lie in 0..{comb(n, k)}")
    _require_cap(comb(comb(n, k), size), cap, "family search space")
    if size == 0:
        return 0
    all_sets = list(combinations(range(1, n + 1), k))
    set_masks: dict[tuple[int, ...], int] | None = None
    if r_colorable is not None:
        if r_colorable < 1:
            raise ValueError("r_colorable must be at least 1")
        r = min(r_colorable, n)
        if r < k:
            raise ValueError(f"no {r_colorable}-colorable family of {k}-sets exists")
        _require_cap(r**n, cap, "coloring assignment space")
        colorings = list(product(range(r), repeat=n))
        set_masks = {}
        for s in all_sets:
            mask = 0
            for i, coloring in enumerate(colorings):
                if len({coloring[e - 1] for e in s}) == k:
                    mask |= 1 << i
            set_masks[s] = mask
    best: int | None = None
    for family in combinations(all_sets, size):
        if set_masks is not None:
            ok = -1
            for s in family:
                ok &= set_masks[s]
                if not ok:
                    break
            if not ok:
                continue
        shad = {sub for s in family for sub in combinations(s, p)}
        if best is None or len(shad) < best:
            best = len(shad)
    if best is None:
        raise ValueError("no qualifying family exists at this size")
    return best


# ---------------------------------------------------------------------------
# partition edits and blowup search
# ---------------------------------------------------------------------------


def min_edits_to_r_partite(
    g: Graph, r: int, *, cap: int | None = DEFAULT_PARTITION_CAP
) -> int:
    """Minimum edge deletions after which the rest of g is r-partite.

    Equals m minus the maximum number of edges captured between the
    classes of an r-part vertex partition; computed exactly by
    component-wise backtracking over canonical part assignments with
    cost pruning.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    _require_cap(g.vertex_count, cap, "vertex count for exact partition mode")
    total = 0
    for verts in _component_vertex_lists(g):
        if len(verts) > 1:
            total += _component_min_edits(g, verts, r)
    return total


def _component_min_edits(g: Graph, verts: list[int], r: int) -> int:
    # BFS order from a maximum-degree vertex keeps each prefix connected,
    # so bad assignments accumulate cost early and prune well.
    root = max(verts, key=lambda v: g.adjacency[v].bit_count())
    order = [root]
    seen = 1 << root
    head = 0
    while head < len(order):
        for u in _bits(g.adjacency[order[head]]):
            if not seen >> u & 1:
                seen |= 1 << u
                order.append(u)
        head += 1

    # greedy upper bound
    part_masks = [0] * r
    greedy = 0
    for v in order:
        costs = [(g.adjacency[v] & pm).bit_count() for pm in part_masks]
        pi = costs.index(min(costs))
        greedy += costs[pi]
        part_masks[pi] |= 1 << v
    if greedy == 0:
        return 0
    best = greedy

    part_masks = [0] * r

    def rec(i: int, cost: int, used_parts: int) -> None:
        nonlocal best
        if cost >= best:
            return
        if i == len(order):
            best = cost
            return
        v = order[i]
        for pi in range(min(used_parts + 1, r)):
            add = (g.adjacency[v] & part_masks[pi]).bit_count()
            if cost + add < best:
                part_masks[pi] |= 1 << v
                rec(i + 1, cost + add, max(used_parts, pi + 1))
                part_masks[pi] ^= 1 << v

    rec(0, 0, 0)
    return best


def find_blowup(
    g: Graph, parts: int, t: int, *, cap_override: bool = False
) -> tuple[bool, tuple[tuple[int, ...], ...] | None]:
    """Search for a complete `parts`-partite subgraph with all parts of size t.

    Parts need only be completely joined to each other (non-induced
    containment), so edges inside a part are irrelevant.  Returns the
    witness parts ordered by their minimum elements when found.
    """
    if parts < 1 or t < 1:
        raise ValueError("parts and t must be at least 1")
    if not cap_override:
        _require_cap(t, _BLOWUP_T_CAP, "blowup part size")
        _require_cap(g.vertex_count, _BLOWUP_VERTEX_CAP, "vertex count")
    full = ((1 << (g.vertex_count + 1)) - 1) & ~1

    def rec(prev_min: int, common: int, remaining: int) -> list[tuple[int, ...]] | None:
        if remaining == 0:
            return []
        cands = [v for v in _bits(common) if v > prev_min]
        if len(cands) < t * remaining:
            return None
        for combo in combinations(cands, t):
            new_common = common
            for v in combo:
                new_common &= g.adjacency[v]
            sub = rec(combo[0], new_common, remaining - 1)
            if sub is not None:
                return [combo] + sub
        return None

    found = rec(0, full, parts)
    return (found is not None, tuple(found) if found is not None else None)


# ---------------------------------------------------------------------------
# deterministic worker partitioning
# ---------------------------------------------------------------------------


def _partition(items: list, workers: int) -> list[list]:
    w = max(1, workers)
    return [items[i::w] for i in range(w)] if w > 1 else [items]


def _range_blocks(total: int, workers: int) -> list[tuple[int, int]]:
    w = max(1, workers)
    if w == 1 or total <= w:
        return [(0, total)]
    step = (total + w - 1) // w
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_chunks(fn, payloads: list, workers: int) -> list:
    """Evaluate chunks, in parallel when asked; merging stays associative."""
    if max(1, workers) == 1 or len(payloads) <= 1:
        return [fn(p) for p in payloads]
    try:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, payloads))
    except (OSError, PermissionError):
        return [fn(p) for p in payloads]
