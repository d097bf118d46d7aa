"""Local graph surgeries whose effect on the sum-connectivity index is a
strict inequality, plus seeded generators of random valid instances for
property testing.

Each transform validates its structural preconditions and raises
ValueError otherwise; ``rewire_to_path_end`` additionally checks one of
three degree-pattern guards unless ``forced=True``.
"""

from __future__ import annotations

import random

from .graph import Graph, _bits


def attach_path(g: Graph, u: int, length: int) -> Graph:
    """Attach a path on ``length`` new vertices at u (u gains degree 1)."""
    if length < 0:
        raise ValueError("path length must be >= 0")
    out = g
    anchor = u
    for _ in range(length):
        out = out.add_pendant(anchor)
        anchor = out.n - 1
    return out


def merge_paths(q: Graph, u: int, a: int, b: int) -> tuple[Graph, Graph]:
    """Return (g1, g2): g1 attaches paths on a and on b vertices at u,
    g2 attaches a single path on a+b vertices.  chi(g1) < chi(g2)."""
    if q.n < 2:
        raise ValueError("host graph needs at least 2 vertices")
    if not q.is_connected():
        raise ValueError("host graph must be connected")
    if not 0 <= u < q.n:
        raise ValueError(f"vertex {u} out of range")
    if not a >= b >= 1:
        raise ValueError(f"need a >= b >= 1, got a={a}, b={b}")
    g1 = attach_path(attach_path(q, u, a), u, b)
    g2 = attach_path(q, u, a + b)
    return g1, g2


def contract_and_pendant(g: Graph, u: int, v: int) -> Graph:
    """Remove edge uv, identify u and v, attach a pendant at the merged
    vertex.  Requires deg >= 2 at both ends and no common neighbor; the
    vertex count is preserved and chi strictly drops."""
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise ValueError("both endpoints need degree >= 2")
    if g.adj[u] & g.adj[v]:
        raise ValueError("endpoints share a neighbor")
    out = g.remove_edge(u, v)
    for x in list(_bits(out.adj[v])):
        out = out.add_edge(u, x).remove_edge(v, x)
    merged = v if u == g.n - 1 else u  # delete_vertex moves the top label into v
    out = out.delete_vertex(v)
    return out.add_pendant(merged)


def _attached_path_from(h: Graph, u: int, u_prime: int) -> list[int]:
    """Vertices of the pendant path ending at u_prime and attached at u,
    listed from u_prime towards u (u excluded)."""
    if h.degree(u_prime) != 1:
        raise ValueError("u_prime must be a pendant vertex")
    seq = [u_prime]
    prev = -1
    cur = u_prime
    while True:
        nxt = [x for x in _bits(h.adj[cur]) if x != prev]
        if len(nxt) != 1:
            raise ValueError("pendant path is not simple")
        step = nxt[0]
        if step == u:
            break
        if h.degree(step) != 2:
            raise ValueError("pendant path has a branching vertex")
        seq.append(step)
        prev, cur = cur, step
    return seq


def rewire_to_path_end(
    h: Graph, u: int, u2: int, u_prime: int, forced: bool = False
) -> Graph:
    """Replace the edge u-u2 by u_prime-u2, where u_prime is the free end
    of a pendant path attached at u and u2 is another neighbor of u
    outside that path.

    With forced=False one of three degree patterns must hold in the host
    M (= graph minus the attached path): deg_M(u)=2 with max degree of M
    at most 5; deg_M(u)=3 with at least two degree-2 neighbors of u and
    deg_M(u2)=2; or deg_M(u)=4 with all neighbors of u of degree 2.
    """
    if not h.is_connected():
        raise ValueError("graph must be connected")
    if len({u, u2, u_prime}) != 3:
        raise ValueError("u, u2, u_prime must be distinct")
    if not h.has_edge(u, u2):
        raise ValueError("u2 must be a neighbor of u")
    path = _attached_path_from(h, u, u_prime)
    pathset = set(path)
    if u in pathset or u2 in pathset:
        raise ValueError("u2 must lie outside the attached path")
    path_nbrs_of_u = [x for x in _bits(h.adj[u]) if x in pathset]
    if len(path_nbrs_of_u) != 1:
        raise ValueError("the path must meet u exactly once")

    if not forced:
        def deg_m(x: int) -> int:
            return sum(1 for y in _bits(h.adj[x]) if y not in pathset)

        du = deg_m(u)
        m_vertices = [x for x in range(h.n) if x not in pathset]
        nbrs_u = [x for x in _bits(h.adj[u]) if x not in pathset]
        ok = False
        if du == 2:
            ok = max(deg_m(x) for x in m_vertices) <= 5
        elif du == 3:
            ok = sum(1 for x in nbrs_u if deg_m(x) == 2) >= 2 and deg_m(u2) == 2
        elif du == 4:
            ok = all(deg_m(x) == 2 for x in nbrs_u)
        if not ok:
            raise ValueError(
                "no degree-pattern guard applies (pass forced=True to override)"
            )

    return h.remove_edge(u, u2).add_edge(u_prime, u2)


# -- seeded instance generators (test surface) --------------------------------


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random tree on n vertices plus up to ``extra`` random extra edges."""
    g = Graph(1, (0,))
    for v in range(1, n):
        g = g.add_pendant(rng.randrange(v))
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v and not g.has_edge(u, v):
            g = g.add_edge(u, v)
    return g


def random_merge_instance(rng: random.Random) -> tuple[Graph, int, int, int]:
    q = random_connected_graph(rng, rng.randint(2, 8), rng.randint(0, 4))
    u = rng.randrange(q.n)
    b = rng.randint(1, 3)
    a = rng.randint(b, 4)
    return q, u, a, b


def random_contract_instance(rng: random.Random) -> tuple[Graph, int, int]:
    while True:
        g = random_connected_graph(rng, rng.randint(4, 10), rng.randint(1, 4))
        good = [
            (u, v)
            for u, v in g.edges()
            if g.degree(u) >= 2 and g.degree(v) >= 2 and not (g.adj[u] & g.adj[v])
        ]
        if good:
            return (g, *rng.choice(good))


def _decorate(rng: random.Random, g: Graph, avoid: set[int], cap: int) -> Graph:
    """Attach a few short paths at vertices outside ``avoid``, keeping
    every decorated vertex's degree at most ``cap``."""
    for _ in range(rng.randint(0, 2)):
        v = rng.randrange(g.n)
        if v in avoid or g.degree(v) >= cap:
            continue
        g = attach_path(g, v, rng.randint(1, 2))
    return g


def random_rewire_instance(
    rng: random.Random, case: str
) -> tuple[Graph, int, int, int]:
    """Build (h, u, u2, u_prime) satisfying the named guard of
    rewire_to_path_end ('i', 'ii', or 'iii')."""
    from .families import cycle

    c = rng.randint(3, 7)
    m = cycle(c)
    u = 0
    cyc_nbrs = m.neighbors(u)
    if case == "i":
        m = _decorate(rng, m, avoid={u}, cap=4)
        u2 = rng.choice(cyc_nbrs)
    elif case == "ii":
        m = attach_path(m, u, rng.randint(1, 3))  # third branch at u
        avoid = {u, *cyc_nbrs}
        m = _decorate(rng, m, avoid=avoid, cap=5)
        u2 = rng.choice(cyc_nbrs)  # cycle neighbor keeps degree 2
    elif case == "iii":
        d = rng.randint(3, 6)
        # second cycle through u: add a chain and close it
        chain = []
        anchor = u
        for _ in range(d - 1):
            m = m.add_pendant(anchor)
            anchor = m.n - 1
            chain.append(anchor)
        m = m.add_edge(chain[-1], u)
        avoid = {u, *m.neighbors(u)}
        m = _decorate(rng, m, avoid=avoid, cap=5)
        u2 = rng.choice(m.neighbors(u))
    else:
        raise ValueError(f"unknown case {case!r}")
    h = attach_path(m, u, rng.randint(1, 3))
    u_prime = h.n - 1
    return h, u, u2, u_prime
