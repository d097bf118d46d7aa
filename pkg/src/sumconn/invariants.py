"""Degree-based indices and matching numbers.

The sum-connectivity index chi(G) = sum over edges of 1/sqrt(d(u)+d(v))
and the Randic index R(G) = sum over edges of 1/sqrt(d(u)*d(v)) both
depend only on a small multiset signature of the edges, so they are
computed from the signature and cost O(#distinct values), not O(m).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .errors import CapacityError
from .graph import Graph
from .radical import RadicalSum

_BRUTE_EDGE_CAP = 22


def edge_sum_signature(g: Graph) -> dict[int, int]:
    """Multiset {d(u)+d(v): count} over the edges; a sufficient statistic
    for the sum-connectivity index."""
    deg = g.degrees()
    return dict(Counter(deg[u] + deg[v] for u, v in g.edges()))


def edge_product_signature(g: Graph) -> dict[int, int]:
    deg = g.degrees()
    return dict(Counter(deg[u] * deg[v] for u, v in g.edges()))


@lru_cache(maxsize=None)
def _inv_sqrt(s: int) -> RadicalSum:
    return RadicalSum.from_inverse_sqrt(s)


def radical_from_signature(sig: dict[int, int]) -> RadicalSum:
    """sum over the signature of count/sqrt(value), exactly."""
    return RadicalSum.total(_inv_sqrt(s).scale(c) for s, c in sig.items())


def sum_connectivity(g: Graph) -> RadicalSum:
    return radical_from_signature(edge_sum_signature(g))


def randic(g: Graph) -> RadicalSum:
    return radical_from_signature(edge_product_signature(g))


def matching_number(g: Graph) -> int:
    """Exact maximum matching size by memoized branching on the lowest
    still-matchable vertex (either unmatched or matched to one of its
    available neighbors)."""
    adj = g.adj
    memo: dict[int, int] = {}

    def mu(avail: int) -> int:
        pick = -1
        rest = avail
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            if adj[v] & avail:
                pick = v
                break
            rest ^= b
        if pick < 0:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        vbit = 1 << pick
        best = mu(avail ^ vbit)
        nbrs = adj[pick] & avail
        while nbrs:
            ub = nbrs & -nbrs
            best2 = 1 + mu(avail ^ vbit ^ ub)
            if best2 > best:
                best = best2
            nbrs ^= ub
        memo[avail] = best
        return best

    return mu((1 << g.n) - 1)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) == g.n // 2


def _matching_dp(g: Graph) -> tuple[list[tuple[int, int]], int, list[int]]:
    """Subset DP over the edge list: returns (edges, best size, list of
    edge-subset masks that are matchings of the best size)."""
    edges = list(g.edges())
    m = len(edges)
    if m > _BRUTE_EDGE_CAP:
        raise CapacityError(f"brute-force matching capped at {_BRUTE_EDGE_CAP} edges")
    vmask = [(1 << u) | (1 << v) for u, v in edges]
    size = 1 << m
    valid = bytearray(size)
    cover = [0] * size
    valid[0] = 1
    best = 0
    best_masks = [0]
    for mask in range(1, size):
        low = mask & -mask
        e = low.bit_length() - 1
        rest = mask ^ low
        if valid[rest] and not (cover[rest] & vmask[e]):
            valid[mask] = 1
            cover[mask] = cover[rest] | vmask[e]
            k = mask.bit_count()
            if k > best:
                best = k
                best_masks = [mask]
            elif k == best:
                best_masks.append(mask)
    return edges, best, best_masks


def matching_number_bruteforce(g: Graph) -> int:
    """Independent oracle: maximum size over all pairwise-disjoint edge
    subsets, via DP on subset masks of the edge list."""
    return _matching_dp(g)[1]


def all_maximum_matchings(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    edges, _, masks = _matching_dp(g)
    out = []
    for mask in masks:
        out.append(tuple(edges[i] for i in range(len(edges)) if (mask >> i) & 1))
    return out
