import pytest
from hypothesis import given

from rankmatch import LoopGraph, Matching, max_matching_witness, mu, nu, u_a, u_s
from rankmatch.graph import all_edges, enumerate_graphs, format_graph, max_nu_witness, parse_graph

from conftest import loop_graphs
from oracles import brute_matching


def test_matching_numbers_examples():
    G = LoopGraph(3, [(1, 2), (3,)])
    assert (nu(G), mu(G)) == (2, 3)
    assert (nu(LoopGraph(3)), mu(LoopGraph(3))) == (0, 0)
    path = LoopGraph(3, [(1, 2), (2, 3)])
    assert (nu(path), mu(path)) == brute_matching(3, path.sorted_edges()) == (1, 2)


def test_witness_examples():
    assert max_matching_witness(LoopGraph(3, [(1, 2), (3,)])).edges == ((1, 2), (3,))
    assert max_matching_witness(LoopGraph(2, [(1,), (1, 2)])).edges == ((1, 2),)
    assert max_matching_witness(LoopGraph(4)).edges == ()


def test_mu_witness_is_unique_in_example():
    # {{1,2},{3}} is the only matching of {{1,2},{3}} covering three vertices
    G = LoopGraph(3, [(1, 2), (3,)])
    edges = G.sorted_edges()
    covering = [s for s in ([], [edges[0]], [edges[1]], edges)
                if sum(len(e) for e in s) == 3]
    assert covering == [edges]


def test_nu_and_mu_witnesses_can_differ():
    # a loop adds a vertex to mu but not an edge to nu beyond the pair
    G = LoopGraph(3, [(1,), (2,), (1, 2)])
    assert mu(G) == 2 and nu(G) == 2
    assert len(max_nu_witness(G)) == 2


def test_matching_rejects_overlap():
    with pytest.raises(ValueError):
        Matching(((1, 2), (2, 3)))
    assert Matching(((1, 2), (3,))).mu == 3


@pytest.mark.parametrize("n, k, want", [(4, 2, 3), (6, 4, 10), (10, 4, 17), (5, 0, 0), (7, 6, 21)])
def test_u_a(n, k, want):
    assert u_a(n, k) == want


@pytest.mark.parametrize("n, k, want", [(3, 2, 3), (6, 3, 7), (5, 4, 10), (4, 0, 0), (4, 1, 1)])
def test_u_s(n, k, want):
    assert u_s(n, k) == want


def test_u_a_rejects_odd_or_out_of_range():
    for n, k in ((5, 3), (4, 6), (4, -2)):
        with pytest.raises(ValueError):
            u_a(n, k)


def test_enumeration_counts():
    assert len(list(enumerate_graphs(2, False))) == 2
    assert len(list(enumerate_graphs(2, True))) == 8
    assert len(list(enumerate_graphs(3, False))) == 8
    graphs = list(enumerate_graphs(3, True))
    assert len(graphs) == 64 and len(set(graphs)) == 64
    assert len(all_edges(4, True)) == 10


def test_enumeration_limits():
    with pytest.raises(ValueError):
        next(enumerate_graphs(7, True))


def test_graph_text_round_trip():
    G = LoopGraph(4, [(2, 3), (1,), (4, 1)])
    assert parse_graph(format_graph(G), 4) == G
    assert str(G) == "{ {1},{1,4},{2,3} }"


def test_parse_graph_errors_name_the_line():
    with pytest.raises(ValueError, match="line 2"):
        parse_graph("1 2\n1 x\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_graph("1 2 3\n")
    with pytest.raises(ValueError):
        parse_graph("1 5\n", n=4)


def test_loopgraph_rejects_out_of_range():
    with pytest.raises(ValueError):
        LoopGraph(2, [(1, 3)])


@given(loop_graphs(max_n=6, loops=True))
def test_dp_matches_brute_force(data):
    n, edges = data
    G = LoopGraph(n, edges)
    assert (nu(G), mu(G)) == brute_matching(n, G.sorted_edges())
    W = max_matching_witness(G)
    assert W.mu == mu(G) and all(e in G for e in W.edges)


@given(loop_graphs(max_n=7, loops=False))
def test_loopless_mu_is_twice_nu(data):
    n, edges = data
    G = LoopGraph(n, edges)
    assert mu(G) == 2 * nu(G)


@given(loop_graphs(max_n=6, loops=True))
def test_graph_bounds_hold(data):
    n, edges = data
    G = LoopGraph(n, edges)
    assert len(G) <= u_s(n, mu(G))
    if not G.has_loops and mu(G) < n:
        assert len(G) <= u_a(n, mu(G))
