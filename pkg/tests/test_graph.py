import itertools

import pytest
from hypothesis import given

from conftest import signed_graphs
from signed_csf.errors import GraphFormatError
from signed_csf.graph import (
    EdgeRef,
    SignedGraph,
    component_vertex_sets,
    connected_components,
    decompose,
    disjoint_union,
    format_graph,
    is_balanced,
    parse_graph,
    type_of_subset,
)
from signed_csf.partitions import canonicalize

TRIANGLE_ONE_NEG = "v 3\n+ 1 2\n+ 2 3\n- 1 3\n"


def test_parse_and_format():
    g = parse_graph("# comment\nv 3\n+ 2 1  # reversed pair\n- 1 3\no 2\n")
    assert g.pos_edges == {(1, 2)}
    assert g.neg_edges == {(1, 3)}
    assert g.loops == {2}
    assert [str(e) for e in g.edges] == ["+1,2", "-1,3", "o2"]
    assert parse_graph(format_graph(g)) == g


def test_same_pair_with_both_signs_is_allowed():
    g = parse_graph("v 2\n+ 1 2\n- 1 2\n")
    assert g.n_edges == 2


@pytest.mark.parametrize(
    "text, line",
    [
        ("v 2\n+ 1 1\n", 2),
        ("v 2\n+ 1 3\n", 2),
        ("v 2\n+ 1 2\n+ 2 1\n", 3),
        ("+ 1 2\n", 1),
        ("v 2\nx 1\n", 2),
        ("v 2\no 1 2\n", 2),
        ("v 2\n- 1 b\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError, match=f"line {line}"):
        parse_graph(text)


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing here\n")


def test_build_rejects_duplicates_and_bad_vertices():
    with pytest.raises(ValueError):
        SignedGraph.build(2, pos=[(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        SignedGraph.build(2, loops=[3])


def test_harary_split_of_balanced_triangle():
    g = parse_graph("v 3\n+ 1 2\n- 2 3\n- 1 3\n")
    d = decompose(g, g.edges)
    assert not d.unbalanced_vertices
    assert d.balanced_parts == ((frozenset({1, 2}), frozenset({3})),)
    assert d.type == canonicalize(0, [(2, 1)])


def test_unbalanced_triangle_and_loop():
    g = parse_graph(TRIANGLE_ONE_NEG)
    assert type_of_subset(g, g.edges) == canonicalize(3)
    assert not is_balanced(g, g.edges)
    h = parse_graph("v 2\no 1\n")
    assert type_of_subset(h, h.edges) == canonicalize(1, [(1, 0)])
    assert type_of_subset(h, []) == canonicalize(0, [(1, 0), (1, 0)])


def test_two_cycle_is_unbalanced():
    g = parse_graph("v 2\n+ 1 2\n- 1 2\n")
    assert type_of_subset(g, g.edges) == canonicalize(2)
    assert type_of_subset(g, [EdgeRef.negative(1, 2)]) == canonicalize(0, [(1, 1)])


def test_subset_must_be_edges():
    g = parse_graph("v 2\n+ 1 2\n")
    with pytest.raises(ValueError):
        decompose(g, [EdgeRef.negative(1, 2)])


@given(signed_graphs())
def test_type_has_degree_n_and_balance_matches_cycle_parity(g):
    for k in range(min(g.n_edges, 4) + 1):
        for s in itertools.combinations(g.edges, k):
            t = type_of_subset(g, s)
            assert t.degree == g.n_vertices
            assert is_balanced(g, s) == (t.u == 0)


@given(signed_graphs(), signed_graphs())
def test_disjoint_union_and_components(g, h):
    u = disjoint_union(g, h)
    assert u.n_vertices == g.n_vertices + h.n_vertices
    assert u.n_edges == g.n_edges + h.n_edges
    parts = connected_components(u)
    assert sum(p.n_vertices for p in parts) == u.n_vertices
    assert sum(p.n_edges for p in parts) == u.n_edges
    assert len(parts) == len(component_vertex_sets(g)) + len(component_vertex_sets(h))


def test_positive_part_and_subgraph():
    g = parse_graph("v 3\n+ 1 2\n- 2 3\no 3\n")
    assert g.positive_part().edges == (EdgeRef.positive(1, 2),)
    sub = g.subgraph([EdgeRef.loop(3)])
    assert sub.n_vertices == 3 and sub.loops == {3}
