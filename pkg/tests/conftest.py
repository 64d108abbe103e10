import itertools

from hypothesis import strategies as st

from signed_csf.graph import SignedGraph
from signed_csf.partitions import canonicalize
from signed_csf.ssym import SSymFunction

columns = st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda c: c != (0, 0))


@st.composite
def partition_types(draw, max_columns=3):
    return canonicalize(draw(st.integers(0, 2)), draw(st.lists(columns, max_size=max_columns)))


@st.composite
def ssym_functions(draw, max_terms=4):
    keys = draw(st.lists(partition_types(max_columns=2), max_size=max_terms))
    return SSymFunction({k: draw(st.integers(-5, 5)) for k in keys})


@st.composite
def signed_graphs(draw, max_vertices=4):
    n = draw(st.integers(1, max_vertices))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    pos = draw(st.frozensets(st.sampled_from(pairs))) if pairs else frozenset()
    neg = draw(st.frozensets(st.sampled_from(pairs))) if pairs else frozenset()
    loops = draw(st.frozensets(st.integers(1, n)))
    return SignedGraph(n, pos, neg, loops)
