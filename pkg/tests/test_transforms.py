import random

import pytest

from sumconn.families import cycle
from sumconn.graph import Graph
from sumconn.invariants import sum_connectivity as chi
from sumconn.transforms import (
    attach_path,
    contract_and_pendant,
    merge_paths,
    random_contract_instance,
    random_merge_instance,
    random_rewire_instance,
    rewire_to_path_end,
)


def test_attach_path():
    g = attach_path(cycle(3), 0, 2)
    assert g.n == 5
    assert g.degrees() == (3, 2, 2, 2, 1)
    assert attach_path(g, 1, 0) == g


def test_merge_paths_strict_on_seeded_instances():
    rng = random.Random(2024)
    for _ in range(120):
        q, u, a, b = random_merge_instance(rng)
        g1, g2 = merge_paths(q, u, a, b)
        assert g1.n == g2.n == q.n + a + b
        assert chi(g1).cmp(chi(g2)) < 0


def test_merge_paths_k4_minus_e_example():
    # two paths of lengths 2 and 1 versus one of length 3, rooted at a
    # degree-2 vertex of K4-e: the split form has strictly smaller chi
    q = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    g1, g2 = merge_paths(q, 2, 2, 1)
    assert chi(g1) < chi(g2)


def test_merge_paths_validation():
    q = cycle(3)
    with pytest.raises(ValueError):
        merge_paths(q, 0, 1, 2)  # needs a >= b
    with pytest.raises(ValueError):
        merge_paths(q, 0, 1, 0)
    with pytest.raises(ValueError):
        merge_paths(q, 3, 1, 1)
    with pytest.raises(ValueError):
        merge_paths(Graph.from_edges(1, []), 0, 2, 1)
    disconnected = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        merge_paths(disconnected, 0, 2, 1)


def test_contract_strict_on_seeded_instances():
    rng = random.Random(77)
    for _ in range(120):
        g, u, v = random_contract_instance(rng)
        g1 = contract_and_pendant(g, u, v)
        assert g1.n == g.n
        assert sum(g1.degrees()) == 2 * g1.edge_count
        assert chi(g).cmp(chi(g1)) > 0


def test_contract_validation():
    g = cycle(4)
    with pytest.raises(ValueError):
        contract_and_pendant(g, 0, 2)  # not an edge
    tri = cycle(3)
    with pytest.raises(ValueError):
        contract_and_pendant(tri, 0, 1)  # common neighbor
    star = Graph.from_edges(3, [(0, 1), (0, 2)])
    with pytest.raises(ValueError):
        contract_and_pendant(star, 0, 1)  # endpoint of degree one


@pytest.mark.parametrize("case", ["i", "ii", "iii"])
def test_rewire_strict_on_seeded_instances(case):
    rng = random.Random(404)
    for _ in range(120):
        h, u, u2, u_prime = random_rewire_instance(rng, case)
        h2 = rewire_to_path_end(h, u, u2, u_prime)
        assert h2.n == h.n
        assert h2.edge_count == h.edge_count
        assert chi(h2).cmp(chi(h)) > 0


def test_rewire_guard_rejection_and_force():
    # degree-5 hub: outside every guard, so the move must be refused
    h = cycle(3)
    for _ in range(3):
        h = h.add_pendant(0)
    h = attach_path(h, 0, 2)
    u_prime = h.n - 1
    with pytest.raises(ValueError):
        rewire_to_path_end(h, 0, 1, u_prime)
    forced = rewire_to_path_end(h, 0, 1, u_prime, forced=True)
    assert forced.has_edge(u_prime, 1) and not forced.has_edge(0, 1)


def test_rewire_validation():
    h = attach_path(cycle(4), 0, 2)
    tail = h.n - 1
    with pytest.raises(ValueError):
        rewire_to_path_end(h, 0, 2, tail)  # u2 not adjacent to u
    with pytest.raises(ValueError):
        rewire_to_path_end(h, 0, 1, 2)  # u_prime not a pendant path end
    with pytest.raises(ValueError):
        rewire_to_path_end(h, 0, 0, tail)  # vertices must be distinct
