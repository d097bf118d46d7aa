"""Constructors for the extremal families and the five pendant-free
bicyclic classes.

Vertex labelings are fixed and documented per constructor so that graph6
output is byte-stable; ``members_*`` functions return canonical
representatives (sorted by canonical code) instead, one per isomorphism
class, and return an empty list below the class's first feasible n.
"""

from __future__ import annotations

from .graph import Graph, canonical_code, canonical_graph

#: first n at which each CLI family token has members
MIN_N = {
    "bnm": 6,
    "bnab": 4,
    "unm": 4,
    "h6": 6,
    "cycle": 3,
    "path": 1,
    "b1-1": 6,
    "b1-2": 7,
    "b2": 5,
    "b3-1": 4,
    "b3-2": 5,
}


def family_min_n(name: str) -> int:
    try:
        return MIN_N[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None


def cycle(n: int) -> Graph:
    """C_n on 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """P_n on 0..n-1 in path order."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_bnm(n: int, m: int) -> Graph:
    """Two triangles sharing vertex 0, n-2m+1 pendant edges at 0, and
    m-3 paths on two vertices at 0.

    Labels: triangles (0,1,2) and (0,3,4); pendants 5..5+p-1 where
    p = n-2m+1; then the 2-vertex paths as consecutive pairs (x, x+1)
    with x adjacent to 0.  Vertex 0 ends with degree n-m+2 and the graph
    has matching number m.
    """
    if not 3 <= m <= n // 2:
        raise ValueError(f"need 3 <= m <= n/2, got n={n}, m={m}")
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]
    nxt = 5
    for _ in range(n - 2 * m + 1):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(m - 3):
        edges.append((0, nxt))
        edges.append((nxt, nxt + 1))
        nxt += 2
    return Graph.from_edges(n, edges)


def build_bnab(n: int, a: int, b: int) -> Graph:
    """K4 minus an edge with a-3 pendants at one degree-3 vertex and b-3
    at the other.

    Labels: 0 and 1 are the adjacent degree-3 vertices, 2 and 3 their
    common neighbors; pendants 4..a at vertex 0, then a+1..n-1 at 1.
    Requires a >= b >= 3 and a + b = n + 2.  Matching number is 2.
    """
    if n < 4 or not (a >= b >= 3) or a + b != n + 2:
        raise ValueError(f"need a >= b >= 3, a+b = n+2, n >= 4; got n={n}, a={a}, b={b}")
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    nxt = 4
    for _ in range(a - 3):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(b - 3):
        edges.append((1, nxt))
        nxt += 1
    return Graph.from_edges(n, edges)


def build_unm(n: int, m: int) -> Graph:
    """Unicyclic: triangle (0,1,2), n-2m+1 pendants at 0, m-2 paths on
    two vertices at 0 (labels as in build_bnm)."""
    if not 2 <= m <= n // 2:
        raise ValueError(f"need 2 <= m <= n/2, got n={n}, m={m}")
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for _ in range(n - 2 * m + 1):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(m - 2):
        edges.append((0, nxt))
        edges.append((nxt, nxt + 1))
        nxt += 2
    return Graph.from_edges(n, edges)


def build_h6() -> Graph:
    """Triangle (0,1,2) with pendants 3,4,5 at 0,1,2 respectively."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def build_b4_plus_pendant() -> Graph:
    """The 4-vertex bicyclic graph (K4 minus an edge, labels as in
    build_bnab) plus a pendant (vertex 4) at the degree-2 vertex 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4)])


def build_b1_1(n: int, a: int) -> Graph:
    """Cycles C_a (labels 0..a-1) and C_{n-a} (labels a..n-1) joined by
    the edge 0-a."""
    b = n - a
    if a < 3 or b < 3:
        raise ValueError(f"need both cycles >= 3, got a={a}, n-a={b}")
    edges = [(i, (i + 1) % a) for i in range(a)]
    edges += [(a + i, a + (i + 1) % b) for i in range(b)]
    edges.append((0, a))
    return Graph.from_edges(n, edges)


def build_b1_2(n: int, a: int, b: int) -> Graph:
    """Disjoint cycles C_a (0..a-1) and C_b (a..a+b-1) joined by a path
    with n-a-b internal vertices (a+b..n-1) from vertex 0 to vertex a,
    i.e. of length n-a-b+1 >= 2."""
    if a < 3 or b < 3 or a + b > n - 1:
        raise ValueError(f"need a, b >= 3 and a+b < n, got n={n}, a={a}, b={b}")
    edges = [(i, (i + 1) % a) for i in range(a)]
    edges += [(a + i, a + (i + 1) % b) for i in range(b)]
    inner = list(range(a + b, n))
    chain = [0] + inner + [a]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def build_b2(n: int, a: int) -> Graph:
    """Cycles C_a (0..a-1) and C_{n+1-a} (0, a..n-1) sharing vertex 0."""
    b = n + 1 - a
    if a < 3 or b < 3:
        raise ValueError(f"need both cycles >= 3, got a={a}, n+1-a={b}")
    edges = [(i, (i + 1) % a) for i in range(a)]
    ring = [0] + list(range(a, n))
    edges += list(zip(ring, ring[1:] + [0]))
    return Graph.from_edges(n, edges)


def build_b3_1(n: int, d: int) -> Graph:
    """C_n (0..n-1) plus the chord 0-d between two non-adjacent cycle
    vertices (2 <= d <= n-2)."""
    if n < 4 or not 2 <= d <= n - 2:
        raise ValueError(f"chord must span non-adjacent vertices, got n={n}, d={d}")
    return cycle(n).add_edge(0, d)


def build_b3_2(n: int, a: int, d: int) -> Graph:
    """C_a (0..a-1) plus a path with n-a internal vertices (a..n-1) from
    vertex 0 to the non-adjacent cycle vertex d, i.e. of length
    n-a+1 >= 2."""
    if not 4 <= a <= n - 1 or not 2 <= d <= a - 2:
        raise ValueError(f"need 4 <= a <= n-1 and a chord-like span, got n={n}, a={a}, d={d}")
    edges = [(i, (i + 1) % a) for i in range(a)]
    chain = [0] + list(range(a, n)) + [d]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def _dedup(graphs) -> list[Graph]:
    by_code: dict[bytes, Graph] = {}
    for g in graphs:
        cg = canonical_graph(g)
        by_code.setdefault(canonical_code(cg), cg)
    return [by_code[c] for c in sorted(by_code)]


def members_b1_1(n: int) -> list[Graph]:
    """All two-cycles-joined-by-an-edge graphs on n vertices."""
    return _dedup(build_b1_1(n, a) for a in range(3, n // 2 + 1))


def members_b1_2(n: int) -> list[Graph]:
    """All two-cycles-joined-by-a-longer-path graphs on n vertices."""
    return _dedup(
        build_b1_2(n, a, b)
        for a in range(3, n)
        for b in range(a, n - a)
    )


def members_b2(n: int) -> list[Graph]:
    """All two-cycles-sharing-a-vertex graphs on n vertices."""
    return _dedup(build_b2(n, a) for a in range(3, (n + 1) // 2 + 1))


def members_b3_1(n: int) -> list[Graph]:
    """All cycle-plus-chord graphs on n vertices."""
    if n < 4:
        return []
    return _dedup(build_b3_1(n, d) for d in range(2, n // 2 + 1))


def members_b3_2(n: int) -> list[Graph]:
    """All cycle-plus-longer-chord-path graphs on n vertices."""
    return _dedup(
        build_b3_2(n, a, d)
        for a in range(4, n)
        for d in range(2, a // 2 + 1)
    )
