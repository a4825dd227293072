import itertools
import math

import numpy as np
import pytest

from orientpow.errors import GroupValidationError, UnsupportedGroupError
from orientpow.groups import Cyclic, maximal_cyclic_subgroups, realize
from orientpow.powgraph import (UndirectedGraph, base_nonbase_partition, complete_graph, degree_size_report,
                                dominating_vertices, is_two_edge_connected, power_graph, variant_graph)

from conftest import group, naive_closure, naive_power_edges


@pytest.mark.parametrize("expr", ["Z(6)", "Z(12)", "Q(8)", "D(8)", "Z(2)xZ(6)", "Z(3)xZ(3)", "D(6)xZ(3)"])
def test_power_graph_matches_naive_powers(expr):
    G = group(expr)
    assert set(power_graph(G).edges) == naive_power_edges(G)


def test_edge_counts():
    assert power_graph(realize(Cyclic(6))).num_edges == 13
    assert power_graph(group("Z(3)xZ(3)")).num_edges == 12
    assert power_graph(group("Q(8)")).num_edges == 16


@pytest.mark.parametrize("n", [6, 12, 30, 36, 60])
def test_cyclic_divisibility_criterion(n):
    X = power_graph(realize(Cyclic(n)))
    o = [n // math.gcd(n, k) for k in range(n)]
    for u, v in itertools.combinations(range(n), 2):
        assert X.has_edge(u, v) == (o[u] % o[v] == 0 or o[v] % o[u] == 0)


def test_dominating_vertices_of_z6():
    assert dominating_vertices(power_graph(realize(Cyclic(6)))) == {0, 1, 5}


@pytest.mark.parametrize("n", [5, 12, 30, 42])
def test_cyclic_dominators_are_generators_and_identity(n):
    gens = {k for k in range(1, n) if math.gcd(k, n) == 1}
    assert dominating_vertices(power_graph(realize(Cyclic(n)))) == gens | {0}


def test_bridges():
    conn = is_two_edge_connected(power_graph(group("D(8)")))
    assert not conn and conn.bridge is not None and 0 in conn.bridge
    assert not is_two_edge_connected(power_graph(group("Z(2)xZ(2)")))
    assert is_two_edge_connected(power_graph(group("Z(2)xZ(6)")))
    assert is_two_edge_connected(power_graph(realize(Cyclic(1))))


def test_disconnected_graph_reports_split():
    X = UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])
    conn = is_two_edge_connected(X)
    assert not conn and conn.split is not None


def test_star_is_z2xz2():
    X = power_graph(group("Z(2)xZ(2)"))
    assert set(X.edges) == {(0, 1), (0, 2), (0, 3)}


@pytest.mark.parametrize("expr", ["Z(12)", "Q(8)", "D(8)", "Z(2)xZ(6)", "D(6)xZ(3)", "Z(3)xZ(3)"])
def test_undirected_diameter_at_most_two(expr):
    X = power_graph(group(expr))
    A = X.adj | np.eye(X.n, dtype=bool)
    assert ((A.astype(int) @ A.astype(int)) > 0).all()


@pytest.mark.parametrize("expr", ["Z(6)", "Q(8)", "D(8)", "D(6)", "Z(2)xZ(6)", "D(6)xZ(3)", "Z(3)xZ(3)"])
def test_variant_chain_and_definitions(expr):
    G = group(expr)
    P, E, C = (variant_graph(G, k) for k in ("pow", "epow", "com"))
    assert not (P.adj & ~E.adj).any()
    assert not (E.adj & ~C.adj).any()
    subs = [naive_closure(G, x) for x in range(G.n)]
    for u, v in itertools.combinations(range(G.n), 2):
        assert E.has_edge(u, v) == any(u in s and v in s for s in subs)
        assert C.has_edge(u, v) == (G.mul[u, v] == G.mul[v, u])


def test_variant_kind_rejected():
    with pytest.raises(GroupValidationError):
        variant_graph(realize(Cyclic(4)), "bogus")


def test_json_round_trip_and_dot():
    X = power_graph(group("Z(2)xZ(6)"))
    assert UndirectedGraph.from_json(X.to_json()) == X
    dot = X.to_dot("P")
    assert dot.startswith('graph "P" {') and dot.count(" -- ") == X.num_edges
    import json
    data = json.loads(X.to_json())
    assert data["edges"] == sorted(data["edges"]) and all(u < v for u, v in data["edges"])


def test_complete_graph():
    assert complete_graph(5).num_edges == 10


def test_base_nonbase_partition():
    G = group("Z(2)xZ(6)")
    part = base_nonbase_partition(G)
    assert part.nonbase == set(G.elements_of_order(6))
    assert part.base_by_prime[2] == set(G.elements_of_order(2))
    assert part.base | part.nonbase | {0} == set(range(G.n))
    with pytest.raises(UnsupportedGroupError):
        base_nonbase_partition(realize(Cyclic(6)))
    with pytest.raises(UnsupportedGroupError):
        base_nonbase_partition(group("D(6)"))


def test_degree_size_report():
    r = degree_size_report(210)
    assert r.min_degree < 105 + math.log(210) / math.log(4 / 3)
    assert r.num_edges < math.comb(210, 2) - 210 + 5
    assert not r.degree_condition_holds and not r.edge_condition_holds
    r4 = degree_size_report(4)
    assert r4.num_edges == 6 and r4.edge_threshold == 7 and not r4.edge_condition_holds
    r8 = degree_size_report(8)
    assert r8.min_degree == 7 and not r8.degree_condition_holds
    with pytest.raises(ValueError):
        degree_size_report(2)


@pytest.mark.parametrize("expr", ["D(8)", "Z(2)xZ(2)", "Z(2)xZ(6)", "Q(8)", "D(6)xZ(3)", "Z(2)xZ(4)", "Z(6)"])
def test_bridge_iff_order2_maximal_cyclic(expr):
    G = group(expr)
    has_mcs2 = any(len(C) == 2 for C in maximal_cyclic_subgroups(G))
    assert has_mcs2 == (not is_two_edge_connected(power_graph(G)))
