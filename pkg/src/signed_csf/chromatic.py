"""Chromatic signed-symmetric functions ``X`` and ``Xbar`` of a signed graph.

``X`` is computed two ways: the alternating sum over edge subsets of
``p_type(S)`` (the hot path, delegated to :mod:`.kernels`), and the sum over
flats weighted by the Moebius function.  ``Xbar`` uses ``|mu|`` weights.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from . import kernels
from .errors import CapExceeded, VerificationError
from .flats import DEFAULT_FLAT_CAP, enumerate_flats
from .graph import EdgeKind, SignedGraph, component_vertex_sets
from .partitions import PartitionType
from .polynomials import lagrange_interpolate, to_integer_coefficients
from .ssym import SSymFunction, SymFunction, omega, pi, serialize, specialize

__all__ = [
    "DEFAULT_SUBSET_CAP",
    "ChromaticReport",
    "x_subset",
    "x_flats",
    "xbar_flats",
    "reciprocity_check",
    "chromatic_polynomials",
    "project_positive",
    "stanley_csf",
    "connectivity_certificate",
    "chromatic_report",
]

DEFAULT_SUBSET_CAP = 24

_KIND_CODE = {EdgeKind.POSITIVE: 0, EdgeKind.NEGATIVE: 1, EdgeKind.LOOP: 2}


def _edge_arrays(g: SignedGraph):
    kinds, us, vs = [], [], []
    for e in g.edges:
        kinds.append(_KIND_CODE[e.kind])
        us.append(e.endpoints[0] - 1)
        vs.append(e.endpoints[-1] - 1)
    return kinds, us, vs


def x_subset(g: SignedGraph, cap: int = DEFAULT_SUBSET_CAP) -> SSymFunction:
    """``X = sum over S of (-1)^|S| p_type(S)``."""
    if g.n_edges > cap:
        raise CapExceeded(f"{g.n_edges} edges exceeds the subset budget {cap}")
    table = kernels.subset_type_sums(g.n_vertices, *_edge_arrays(g))
    return SSymFunction({PartitionType(*kernels.decode_type(k)): c for k, c in table.items()})


def _flat_sum(g, weight, cap):
    acc = defaultdict(int)
    for f, m in enumerate_flats(g, cap):
        acc[f.type] += weight(m)
    return SSymFunction(acc)


def x_flats(g: SignedGraph, cap: int = DEFAULT_FLAT_CAP) -> SSymFunction:
    return _flat_sum(g, lambda m: m, cap)


def xbar_flats(g: SignedGraph, cap: int = DEFAULT_FLAT_CAP) -> SSymFunction:
    return _flat_sum(g, abs, cap)


def reciprocity_check(g: SignedGraph) -> bool:
    return omega(x_subset(g)) == xbar_flats(g)


def chromatic_polynomials(g: SignedGraph, x: SSymFunction | None = None) -> tuple[list[int], list[int]]:
    """``(chi, chi_star)`` as ascending integer coefficient lists.

    ``chi(2n+1)`` counts proper colorings into ``[-n, n]``; ``chi_star(2n)``
    counts the zero-free ones.  Both are recovered by interpolating values of
    the specialised ``X`` at ``ell + 1`` nodes.
    """
    if x is None:
        x = x_subset(g)
    ell = g.n_vertices
    odd_n = range(0, ell + 1)
    even_n = range(1, ell + 2)
    chi = lagrange_interpolate([2 * n + 1 for n in odd_n], [specialize(x, n, False) for n in odd_n])
    chi_star = lagrange_interpolate([2 * n for n in even_n], [specialize(x, n, True) for n in even_n])
    out = []
    for name, poly in (("chi", chi), ("chi*", chi_star)):
        ints = to_integer_coefficients(poly)
        if ints is None or len(ints) != ell + 1 or ints[-1] != 1:
            raise VerificationError(f"{name} is not a monic integer polynomial of degree {ell}: {poly}")
        out.append(ints)
    return out[0], out[1]


def project_positive(g: SignedGraph) -> SymFunction:
    """Image of ``X`` in ordinary symmetric functions; equals ``X`` of the positive part."""
    return pi(x_subset(g))


def stanley_csf(n: int, edges) -> SymFunction:
    """Chromatic symmetric function of a simple graph by the subset expansion.

    ``X_G = sum over S of (-1)^|S| p_lambda(S)`` with ``lambda(S)`` the component sizes of ``(V, S)``.
    """
    edges = sorted({tuple(sorted(e)) for e in edges})
    acc = defaultdict(int)
    for mask in range(1 << len(edges)):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for k, (i, j) in enumerate(edges):
            if mask >> k & 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        sizes = defaultdict(int)
        for v in range(1, n + 1):
            sizes[find(v)] += 1
        acc[tuple(sorted(sizes.values(), reverse=True))] += -1 if bin(mask).count("1") % 2 else 1
    return SymFunction(acc)


def connectivity_certificate(g: SignedGraph, x: SSymFunction | None = None) -> bool:
    """True iff ``X`` has a nonzero single-column key ``(0; a/b)`` with ``a + b = n``.

    A pure ``(n;)`` key is not a certificate: isolated looped vertices
    produce ``x_0^n`` without being connected.
    """
    n = g.n_vertices
    if n == 0:
        return False
    if x is None:
        x = x_subset(g)
    return any(key.u == 0 and len(key.columns) == 1 and key.degree == n for key, _ in x.items())


def is_connected(g: SignedGraph) -> bool:
    return len(component_vertex_sets(g)) == 1


@dataclass
class ChromaticReport:
    graph_id: str
    X: SSymFunction
    Xbar: SSymFunction
    omega_check: bool
    chrom_poly: list[int]
    zero_free_poly: list[int]

    def render(self) -> str:
        return (
            f"graph {self.graph_id}\n"
            f"X\n{serialize(self.X)}"
            f"Xbar\n{serialize(self.Xbar)}"
            f"omega_check {'pass' if self.omega_check else 'FAIL'}\n"
            f"chi {' '.join(map(str, self.chrom_poly))}\n"
            f"chi* {' '.join(map(str, self.zero_free_poly))}\n"
        )


def chromatic_report(g: SignedGraph, graph_id: str = "") -> ChromaticReport:
    x = x_subset(g)
    xbar = xbar_flats(g)
    chi, chi_star = chromatic_polynomials(g, x)
    return ChromaticReport(graph_id, x, xbar, omega(x) == xbar, chi, chi_star)
