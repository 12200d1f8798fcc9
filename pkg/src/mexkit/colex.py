"""Colex order on k-sets: comparison, rank/unrank, segments, and shadows.

A k-set is a strictly increasing tuple of positive integers.  The colex
order puts A before B iff the largest element of their symmetric
difference lies in B; on sorted tuples that is exactly comparison of the
reversed tuples.  The r-partite variant restricts the same order to sets
whose elements lie in pairwise distinct residue classes mod r.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

__all__ = [
    "KSetFamily",
    "colex_compare",
    "colex_initial_segment",
    "colex_key",
    "colex_rank",
    "colex_unrank",
    "ffk_min_shadow",
    "format_family",
    "kk_min_shadow",
    "parse_family",
    "rpartite_colex_initial_segment",
    "rpartite_valid",
    "shadow",
]

KSet = tuple[int, ...]


def _validate_kset(a: Iterable[int]) -> KSet:
    t = tuple(a)
    if not t:
        raise ValueError("k-sets must be nonempty")
    prev = 0
    for x in t:
        if not isinstance(x, int) or x <= prev:
            raise ValueError(f"not a strictly increasing positive tuple: {t!r}")
        prev = x
    return t


def colex_key(a: Iterable[int]) -> tuple[int, ...]:
    """Sort key realizing colex order on equal-size sets."""
    return tuple(reversed(tuple(a)))


def colex_compare(a: Iterable[int], b: Iterable[int]) -> int:
    """-1, 0, or 1 as A precedes, equals, or follows B in colex order."""
    ta, tb = _validate_kset(a), _validate_kset(b)
    if len(ta) != len(tb):
        raise ValueError(f"size mismatch: {len(ta)} vs {len(tb)}")
    ka, kb = colex_key(ta), colex_key(tb)
    return (ka > kb) - (ka < kb)


def colex_rank(a: Iterable[int]) -> int:
    """0-based position of a k-set in the colex order on all k-sets."""
    t = _validate_kset(a)
    return sum(comb(e - 1, i) for i, e in enumerate(t, start=1))


def colex_unrank(rank: int, k: int) -> KSet:
    """The k-set at the given 0-based colex rank; inverse of colex_rank."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    rem = rank
    for i in range(k, 0, -1):
        # largest c with comb(c, i) <= rem, by doubling then bisection
        lo, hi = i - 1, i
        while comb(hi, i) <= rem:
            lo, hi = hi, hi * 2
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if comb(mid, i) <= rem:
                lo = mid
            else:
                hi = mid
        out.append(lo + 1)
        rem -= comb(lo, i)
    out.reverse()
    return tuple(out)


@dataclass(frozen=True)
class KSetFamily:
    """A family of distinct k-sets, stored sorted by colex for canonical equality."""

    k: int
    sets: tuple[KSet, ...]

    @classmethod
    def of(cls, k: int, sets: Iterable[Iterable[int]]) -> "KSetFamily":
        if k < 1:
            raise ValueError("k must be at least 1")
        pool = set()
        for s in sets:
            t = _validate_kset(s)
            if len(t) != k:
                raise ValueError(f"set {t!r} has size {len(t)}, expected {k}")
            if t in pool:
                raise ValueError(f"duplicate set {t!r}")
            pool.add(t)
        return cls(k, tuple(sorted(pool, key=colex_key)))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.sets)

    def __contains__(self, item: object) -> bool:
        return item in self.sets


def shadow(family: KSetFamily, p: int) -> KSetFamily:
    """All p-subsets contained in some member of the family."""
    if not 1 <= p < family.k:
        raise ValueError(f"shadow level must satisfy 1 <= p < {family.k}, got {p}")
    out = {sub for s in family for sub in combinations(s, p)}
    return KSetFamily(p, tuple(sorted(out, key=colex_key)))


def colex_initial_segment(k: int, size: int) -> KSetFamily:
    """The first `size` k-sets in colex order."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    return KSetFamily(k, tuple(colex_unrank(i, k) for i in range(size)))


def kk_min_shadow(k: int, size: int, p: int) -> int:
    """Kruskal-Katona lower bound: the p-shadow size of the colex initial segment."""
    if not 1 <= p < k:
        raise ValueError(f"shadow level must satisfy 1 <= p < {k}, got {p}")
    if size == 0:
        return 0
    return len(shadow(colex_initial_segment(k, size), p))


def rpartite_valid(a: Iterable[int], r: int) -> bool:
    """True iff all elements lie in pairwise distinct residue classes mod r."""
    if r < 2:
        raise ValueError("r must be at least 2")
    t = _validate_kset(a)
    return len({x % r for x in t}) == len(t)


def rpartite_colex_initial_segment(r: int, k: int, size: int) -> KSetFamily:
    """The first `size` k-sets of the r-partite colex order.

    Produced by streaming the global colex order and filtering on residue
    validity; the restricted order is exactly the global one on the valid
    sets, so no separate unrank is needed.
    """
    if size < 0:
        raise ValueError("size must be nonnegative")
    if r < 2:
        raise ValueError("r must be at least 2")
    if k > r:
        raise ValueError(f"no valid {k}-sets exist for r={r}")
    picked = []
    rank = 0
    while len(picked) < size:
        s = colex_unrank(rank, k)
        if rpartite_valid(s, r):
            picked.append(s)
        rank += 1
    return KSetFamily(k, tuple(picked))


def ffk_min_shadow(r: int, k: int, size: int, p: int) -> int:
    """Colored Kruskal-Katona lower bound: p-shadow size of the r-partite colex segment."""
    if not 1 <= p < k:
        raise ValueError(f"shadow level must satisfy 1 <= p < {k}, got {p}")
    if size == 0:
        return 0
    return len(shadow(rpartite_colex_initial_segment(r, k, size), p))


def parse_family(text: str) -> KSetFamily:
    """Parse the family text format: one set per line, ascending elements."""
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            sets.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer element in {raw!r}") from exc
    if not sets:
        raise ValueError("empty family text")
    k = len(sets[0])
    return KSetFamily.of(k, sets)


def format_family(family: KSetFamily) -> str:
    """Serialize a family, one set per line in colex order."""
    return "\n".join(" ".join(str(x) for x in s) for s in family) + (
        "\n" if len(family) else ""
    )
