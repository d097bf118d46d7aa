"""Exhaustive enumeration of connected bicyclic graphs up to isomorphism.

Two-phase construction: pendant-free skeletons first, then pendant
closure.  Every bicyclic graph with a pendant vertex stays bicyclic when
that pendant is deleted, so the full class on n vertices is exactly

    bases(n)  union  dedup{ G + pendant-at-v : G in all_bicyclic(n-1) }.

Skeletons are generated from the raw shape parametrization (two cycles
joined by a path of length >= 0, or two hubs joined by three internally
disjoint paths) rather than from the five named families, so comparing
the two is a real consistency check.  An independent brute-force filter
over all (n+1)-edge subsets of K_n is kept as an oracle for small n.

Streams are deterministic: canonical representatives in increasing
canonical-code order.
"""

from __future__ import annotations

import os
import warnings
from functools import lru_cache
from itertools import combinations, islice
from typing import Iterator

import numpy as np

from . import kernels
from .graph import Graph, canonical_graph, to_graph6
from .invariants import matching_number

DEFAULT_BUDGET_N = 12


def budget_n() -> int:
    """Enumeration size above which a warning fires; raised via CHI_BUDGET_N."""
    raw = os.environ.get("CHI_BUDGET_N", "")
    if raw:
        try:
            return max(int(raw), DEFAULT_BUDGET_N)
        except ValueError:
            warnings.warn(f"ignoring malformed CHI_BUDGET_N={raw!r}")
    return DEFAULT_BUDGET_N


def _cycle_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def _chain_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


def _dumbbell(a: int, b: int, link: int) -> Graph:
    """Cycles C_a and C_b joined by a path with ``link`` edges (0 means a
    shared vertex)."""
    if link == 0:
        n = a + b - 1
        edges = _cycle_edges(list(range(a)))
        edges += _cycle_edges([0] + list(range(a, n)))
    else:
        n = a + b + link - 1
        edges = _cycle_edges(list(range(a)))
        edges += _cycle_edges(list(range(a, a + b)))
        edges += _chain_edges([0] + list(range(a + b, n)) + [a])
    return Graph.from_edges(n, edges)


def _theta(p: int, q: int, r: int) -> Graph:
    """Two hubs joined by three internally disjoint paths of p, q, r
    edges (at most one of them a single edge)."""
    n = p + q + r - 1
    hubs = (0, 1)
    edges: list[tuple[int, int]] = []
    nxt = 2
    for length in (p, q, r):
        if length == 1:
            edges.append(hubs)
        else:
            inner = list(range(nxt, nxt + length - 1))
            nxt += length - 1
            edges += _chain_edges([hubs[0]] + inner + [hubs[1]])
    return Graph.from_edges(n, edges)


def _base_shapes(n: int) -> Iterator[Graph]:
    for a in range(3, n + 1):
        # shared vertex: a + b - 1 = n
        b = n + 1 - a
        if b >= a:
            yield _dumbbell(a, b, 0)
        # proper path: a + b + link - 1 = n, link >= 1
        for b2 in range(a, n + 1):
            link = n + 1 - a - b2
            if link >= 1:
                yield _dumbbell(a, b2, link)
    # three paths between two hubs: p + q + r = n + 1, p >= q >= r,
    # q >= 2 keeps the graph simple (at most one length-1 path)
    for r in range(1, n + 1):
        for q in range(max(r, 2), n + 1):
            p = n + 1 - q - r
            if p >= q:
                yield _theta(p, q, r)


def _sorted_dedup(graphs) -> tuple[Graph, ...]:
    by_code: dict[bytes, Graph] = {}
    for g in graphs:
        cg = canonical_graph(g)
        by_code.setdefault(to_graph6(cg).encode("ascii"), cg)
    return tuple(by_code[c] for c in sorted(by_code))


@lru_cache(maxsize=None)
def _bases(n: int) -> tuple[Graph, ...]:
    if n < 4:
        return ()
    return _sorted_dedup(_base_shapes(n))


@lru_cache(maxsize=None)
def _all_bicyclic(n: int) -> tuple[Graph, ...]:
    if n < 4:
        return ()
    grown = (
        h.add_pendant(v) for h in _all_bicyclic(n - 1) for v in range(h.n)
    )
    return _sorted_dedup(list(_bases(n)) + list(grown))


@lru_cache(maxsize=None)
def _all_unicyclic(n: int) -> tuple[Graph, ...]:
    # internal: feeds the unicyclic spot checks only
    if n < 3:
        return ()
    from .families import cycle

    grown = (
        h.add_pendant(v) for h in _all_unicyclic(n - 1) for v in range(h.n)
    )
    return _sorted_dedup(([cycle(n)] if n >= 3 else []) + list(grown))


def _warn_budget(n: int) -> None:
    cap = budget_n()
    if n > cap:
        warnings.warn(
            f"enumerating n={n} beyond the budget of {cap}; this may be slow"
            " (raise CHI_BUDGET_N to silence)"
        )


def all_bicyclic(n: int) -> Iterator[Graph]:
    """All connected bicyclic graphs on n vertices, one canonical
    representative per isomorphism class, in canonical-code order."""
    _warn_budget(n)
    yield from _all_bicyclic(n)


def base_graphs(n: int) -> Iterator[Graph]:
    """The pendant-free bicyclic graphs on n vertices (minimum degree >= 2)."""
    _warn_budget(n)
    yield from _bases(n)


def bicyclic_with_matching(n: int, m: int) -> Iterator[Graph]:
    """Members of all_bicyclic(n) whose matching number is exactly m."""
    _warn_budget(n)
    for g in _all_bicyclic(n):
        if matching_number(g) == m:
            yield g


# -- independent filter oracle ------------------------------------------------


def _codes_to_graphs(code_map: dict[bytes, Graph]) -> list[Graph]:
    return [code_map[c] for c in sorted(code_map)]


def _filter_codes_odometer(n: int, chunk: int = 200_000) -> dict[bytes, Graph]:
    """Drive kernels.scan_chunk over every (n+1)-subset of the K_n edges."""
    pairs = list(combinations(range(n), 2))
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    k = n + 1
    if len(pairs) < k:
        return {}
    state = np.arange(k, dtype=np.int64)
    out = np.zeros((chunk, n), dtype=np.int64)
    found: dict[bytes, Graph] = {}
    done = False
    while not done:
        written, done = kernels.scan_chunk(n, eu, ev, state, chunk, out)
        for i in range(int(written)):
            g = Graph(n, tuple(int(x) for x in out[i]))
            found.setdefault(to_graph6(g).encode("ascii"), g)
    return found


def _filter_codes_numpy(n: int, chunk: int = 200_000) -> dict[bytes, Graph]:
    """Vectorized variant of the same scan: degree filters are evaluated
    per chunk with numpy, survivors finished in Python."""
    pairs = list(combinations(range(n), 2))
    k = n + 1
    if len(pairs) < k:
        return {}
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    found: dict[bytes, Graph] = {}
    combos = combinations(range(len(pairs)), k)
    while True:
        block = list(islice(combos, chunk))
        if not block:
            break
        arr = np.array(block, dtype=np.int64)
        c = arr.shape[0]
        ends = np.concatenate([eu[arr], ev[arr]], axis=1)
        flat = (ends + (np.arange(c)[:, None] * n)).ravel()
        deg = np.bincount(flat, minlength=c * n).reshape(c, n)
        keep = (deg[:, :-1] >= deg[:, 1:]).all(axis=1) & (deg[:, -1] >= 1)
        for row in arr[keep]:
            g = Graph.from_edges(n, [pairs[i] for i in row])
            if g.is_connected():
                cg = canonical_graph(g)
                found.setdefault(to_graph6(cg).encode("ascii"), cg)
    return found


def all_bicyclic_filter(n: int) -> list[Graph]:
    """Brute-force oracle: scan all (n+1)-edge subsets of K_n, keep the
    connected ones, canonicalize, dedup.  Independent of the skeleton
    route; practical for n <= 8."""
    if n < 4:
        return []
    if kernels.USE_NUMBA:
        return _codes_to_graphs(_filter_codes_odometer(n))
    return _codes_to_graphs(_filter_codes_numpy(n))
