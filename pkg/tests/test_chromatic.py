import random

import pytest
from hypothesis import given, settings

from conftest import signed_graphs
from oracles import count_colorings, deletion_contraction
from signed_csf.arrangement import brute_x_truncated
from signed_csf.chromatic import (
    chromatic_polynomials,
    chromatic_report,
    connectivity_certificate,
    is_connected,
    project_positive,
    stanley_csf,
    x_flats,
    x_subset,
    xbar_flats,
)
from signed_csf.corpus import random_sample
from signed_csf.errors import CapExceeded
from signed_csf.graph import SignedGraph, disjoint_union, parse_graph
from signed_csf.ssym import SSymFunction, SymFunction, omega, parse_ssym, specialize, truncate

NEG_EDGE = parse_graph("v 2\n- 1 2\n")
K3 = parse_graph("v 3\n+ 1 2\n+ 2 3\n+ 1 3\n")
P3 = parse_graph("v 3\n+ 1 2\n+ 2 3\n")


def test_x_examples():
    assert x_subset(NEG_EDGE) == parse_ssym("1 (0; 1/0 1/0)\n-1 (0; 1/1)\n")
    assert x_subset(parse_graph("v 1\no 1\n")) == parse_ssym("1 (0; 1/0)\n-1 (1;)\n")
    assert x_subset(SignedGraph(0)) == 1


def test_xbar_example():
    assert xbar_flats(NEG_EDGE) == parse_ssym("1 (0; 1/0 1/0)\n1 (0; 1/1)\n")


def test_subset_cap():
    with pytest.raises(CapExceeded):
        x_subset(K3, cap=2)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_vertices=4))
def test_subset_and_flat_expansions_agree(g):
    x = x_subset(g)
    assert x == x_flats(g)
    assert omega(x) == xbar_flats(g)


@settings(max_examples=25, deadline=None)
@given(signed_graphs(max_vertices=3))
def test_x_matches_proper_colorings(g):
    assert truncate(x_subset(g), 1) == brute_x_truncated(g, 1)


def test_paper_polynomials():
    assert chromatic_polynomials(K3) == ([0, 2, -3, 1], [0, 2, -3, 1])
    assert chromatic_polynomials(P3) == ([0, 1, -2, 1], [0, 1, -2, 1])


def test_loop_and_negative_edge_polynomials():
    chi, chi_star = chromatic_polynomials(parse_graph("v 1\no 1\n"))
    assert (chi, chi_star) == ([-1, 1], [0, 1])
    # one negative edge: kappa(1) != -kappa(2) excludes t of the t^2 pairs
    assert chromatic_polynomials(NEG_EDGE) == ([0, -1, 1], [0, -1, 1])


@settings(max_examples=30, deadline=None)
@given(signed_graphs(max_vertices=3))
def test_specialize_counts_colorings(g):
    x = x_subset(g)
    chi, chi_star = chromatic_polynomials(g, x)
    for n in range(3):
        full, zero_free = count_colorings(g, n), count_colorings(g, n, zero_free=True)
        assert specialize(x, n) == full == sum(c * (2 * n + 1) ** k for k, c in enumerate(chi))
        assert specialize(x, n, True) == zero_free == sum(c * (2 * n) ** k for k, c in enumerate(chi_star))


def test_positive_graphs_reduce_to_ordinary_chromatic_polynomial():
    rng = random.Random(1)
    for _ in range(20):
        g = random_sample(4, 1, seed=rng.randrange(10**6))[0].positive_part()
        chi, chi_star = chromatic_polynomials(g)
        assert chi == chi_star == deletion_contraction(4, g.pos_edges)


@settings(max_examples=40, deadline=None)
@given(signed_graphs(max_vertices=4))
def test_projection_is_csf_of_positive_part(g):
    assert project_positive(g) == stanley_csf(g.n_vertices, g.pos_edges)


def test_stanley_csf_of_an_edge():
    assert stanley_csf(2, [(1, 2)]) == SymFunction({(1, 1): 1, (2,): -1})


@settings(max_examples=30, deadline=None)
@given(signed_graphs(max_vertices=3), signed_graphs(max_vertices=3))
def test_multiplicative_over_disjoint_union(g, h):
    assert x_subset(disjoint_union(g, h)) == x_subset(g) * x_subset(h)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_vertices=4))
def test_connectivity_certificate(g):
    assert connectivity_certificate(g) == is_connected(g)


def test_looped_isolated_vertices_are_not_certified():
    g = parse_graph("v 2\no 1\no 2\n")
    assert not connectivity_certificate(g)
    assert connectivity_certificate(parse_graph("v 1\no 1\n"))


def test_connectivity_of_empty_graph():
    assert connectivity_certificate(SignedGraph(0)) is False


def test_invariant_under_signed_permutations_of_colors():
    g = parse_graph("v 3\n+ 1 2\n- 2 3\no 1\n")
    t = truncate(x_subset(g), 2)
    sigma = {0: 0, 1: 2, -1: -2, 2: -1, -2: 1}
    assert t.act(sigma) == t


def test_report_render():
    text = chromatic_report(NEG_EDGE, "edge").render()
    assert text.startswith("graph edge\nX\n")
    assert "omega_check pass" in text
    assert "chi 0 -1 1\n" in text


def test_x_is_integral_basis_combination():
    assert isinstance(x_subset(K3), SSymFunction)
    assert x_subset(K3).degree() == 3
