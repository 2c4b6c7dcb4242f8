import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from pvacl import graphs
from pvacl.graph_oracle import all_digraphs, oracle
from pvacl.graphs import Digraph, GraphVector, parse_graph, parse_graph_vector, reduce_graph, reduce_to_lines


def vec(text):
    return reduce_to_lines(parse_graph_vector(text))


def test_parse_and_format():
    g = parse_graph("n=4; edges: 2>1, 3>4")
    assert g.n == 4 and set(g.edges) == {(2, 1), (3, 4)}
    assert parse_graph(graphs.format_graph(g)) == g
    assert parse_graph("n=2").edges == ()
    for bad in ("4; 1>2", "n=2; edges: 1-2", "n=2; edges: 1>x", "n=2; edges: 1>3", "n=2; edges: 1>1"):
        with pytest.raises(ValueError):
            parse_graph(bad)


def test_reversal_is_minus():
    L = graphs.make_line(2, [(1, 2)])
    assert vec("(n=2; edges: 2>1)") == {L: -1}
    assert vec("(n=2; edges: 1>2) + (n=2; edges: 2>1)") == {}


def test_triangle_relation():
    assert vec("(n=3; edges: 1>2, 2>3) + (n=3; edges: 2>3, 3>1) + (n=3; edges: 3>1, 1>2)") == {}


def test_oriented_cycle_vanishes():
    assert vec("(n=3; edges: 1>2, 2>3, 3>1)") == {}
    assert vec("(n=2; edges: 1>2, 2>1)") == {}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_line_count(n):
    lines = graphs.enumerate_lines(n)
    assert len(lines) == factorial(n)
    assert len(set(lines)) == len(lines)
    for L in lines:
        assert reduce_graph(L.to_digraph()) == {L: 1}


def test_make_line_rejects_non_lines():
    with pytest.raises(ValueError):
        graphs.make_line(2, [(2, 1)])
    with pytest.raises(ValueError):
        graphs.make_line(3, [(1, 2)])
    assert graphs.line_of(Digraph(2, [(2, 1)])) is None


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_dimension(n):
    ora = oracle(n)
    assert ora.quotient_dimension == factorial(n)
    assert ora.lines_form_basis()


def test_oracle_dimensions_small():
    assert oracle(2).quotient_dimension == 2
    assert oracle(3).quotient_dimension == 6
    assert oracle(4).quotient_dimension == len(graphs.enumerate_lines(4)) == 24


@pytest.mark.parametrize("n", [2, 3])
def test_engine_matches_oracle_exhaustively(n):
    ora = oracle(n)
    for g in all_digraphs(n):
        assert reduce_graph(g) == ora.reduce({g: 1}), g


def test_engine_matches_oracle_sampled_n4():
    ora = oracle(4)
    gs = all_digraphs(4)
    for g in random.Random(7).sample(gs, 200):
        assert reduce_graph(g) == ora.reduce({g: 1}), g


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_reduction_is_equivariant_up_to_relabelling(data):
    n = data.draw(st.integers(2, 5))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    edges = data.draw(st.lists(st.sampled_from(pairs), max_size=n, unique=True))
    g = Digraph(n, edges)
    s = tuple(data.draw(st.permutations(range(1, n + 1))))
    # reduce(s g) = s reduce(g), compared after reducing the relabelled lines again
    lhs = reduce_graph(graphs.act_graph(s, g))
    rhs = reduce_to_lines(GraphVector(n, {graphs.act_graph(s, L.to_digraph()): c
                                          for L, c in reduce_graph(g).items()}))
    assert lhs == rhs


@pytest.mark.parametrize("n", [3, 4, 5])
def test_insertion_and_monotone_identities(n):
    assert reduce_to_lines(graphs.insertion_sum(n)) == {}
    for k in range(2, n + 1):
        assert reduce_to_lines(graphs.monotone_line_sum(n, k)) == {}


def test_cocomposition_example():
    g = parse_graph("n=8; edges: 1>2, 1>3, 2>4, 2>5, 2>6, 7>8")
    co = graphs.cocompose(g, [3, 1, 4])
    assert co.blocks[0] == Digraph(3, [(1, 2), (1, 3)])
    assert co.blocks[1] == Digraph(1, [])
    assert co.blocks[2] == Digraph(4, [(3, 4)])
    assert sorted(co.quotient.edges) == [(1, 2), (1, 3), (1, 3)]
    X = {k: sorted(graphs.externally_connected(g, [3, 1, 4], k)) for k in range(1, 9)}
    assert X == {1: [], 2: [1, 2, 3], 3: [], 4: [1, 3], 5: [1, 2, 3], 6: [1, 2, 3], 7: [], 8: []}


def test_cocompose_bad_sizes():
    with pytest.raises(ValueError):
        graphs.cocompose(parse_graph("n=3"), [1, 1])
    with pytest.raises(ValueError):
        graphs.cocompose(parse_graph("n=2"), [2, 0])


def test_forest_external_sets_match_definition():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 6)
        pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
        g = Digraph(n, rng.sample(pairs, rng.randint(0, n - 1)))
        sizes, left = [], n
        while left:
            m = rng.randint(1, left)
            sizes.append(m)
            left -= m
        co = graphs.cocompose(g, sizes)
        q = co.quotient
        uq = [tuple(sorted(e)) for e in q.edges]
        if len(set(uq)) != len(uq) or graphs.has_undirected_cycle(q.n, q.edges):
            continue
        ext = graphs.forest_external_sets(co, g)
        for k in range(1, n + 1):
            assert set(ext[k]) == set(graphs.externally_connected(g, sizes, k))


def test_graph_vector_parsing():
    v = parse_graph_vector("2*(n=2; edges: 1>2) - (n=2; edges: 2>1)")
    assert vec("2*(n=2; edges: 1>2) - (n=2; edges: 2>1)") == {graphs.make_line(2, [(1, 2)]): 3}
    assert v.n == 2
    for bad in ("", "(n=2; edges: 1>2) + (n=3)", "3*"):
        with pytest.raises(ValueError):
            parse_graph_vector(bad)
