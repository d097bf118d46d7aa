import itertools
import random

from sumconn.graph import Graph, to_graph6


def brute_canonical(g: Graph) -> str:
    # reference canonical form: maximum encoding over every relabeling
    best = ""
    for perm in itertools.permutations(range(g.n)):
        s = to_graph6(g.relabel(perm))
        if s > best:
            best = s
    return best


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def matching_subsets(g: Graph) -> int:
    # independent matching-number oracle: scan every edge subset
    edges = list(g.edges())
    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for sub in itertools.combinations(edges, r):
            seen = set()
            ok = True
            for u, v in sub:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                best = r
                break
    return best
