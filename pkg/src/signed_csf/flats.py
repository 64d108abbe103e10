"""Frame-matroid flats of a signed graph and their Moebius function.

Rank comes from the balance decomposition: ``rank(S) = n - b(S)`` where
``b(S)`` counts balanced components of ``(V, S)``.  Closure adds every edge
that does not raise the rank.  The flat lattice is built level by level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, VerificationError
from .graph import EdgeKind, EdgeRef, SignedGraph, decompose
from .partitions import PartitionType

__all__ = [
    "Flat",
    "FlatLattice",
    "rank",
    "closure",
    "enumerate_flats",
    "characteristic_polynomial",
    "evaluate",
    "localization_flat",
    "multiplicity",
    "DEFAULT_FLAT_CAP",
]

DEFAULT_FLAT_CAP = 20


@dataclass(frozen=True)
class Flat:
    edges: frozenset
    rank: int
    type: PartitionType


def rank(g: SignedGraph, s: Iterable[EdgeRef]) -> int:
    return g.n_vertices - len(decompose(g, s).balanced_parts)


def _flat(g: SignedGraph, edges: frozenset) -> Flat:
    d = decompose(g, edges)
    return Flat(edges, g.n_vertices - len(d.balanced_parts), d.type)


def closure(g: SignedGraph, s: Iterable[EdgeRef]) -> Flat:
    """Smallest flat containing ``s``."""
    s = frozenset(s)
    r = rank(g, s)
    extra = [e for e in g.edges if e not in s and rank(g, s | {e}) == r]
    return _flat(g, s.union(extra))


class FlatLattice:
    """All flats of a signed graph, sorted by ``(rank, edge positions)``, with ``mu(0, F)``."""

    def __init__(self, graph: SignedGraph, flats: Sequence[Flat], mobius: Sequence[int]):
        self.graph = graph
        self.flats = list(flats)
        self.mobius = list(mobius)
        self._index = {f.edges: i for i, f in enumerate(self.flats)}

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(zip(self.flats, self.mobius))

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    def mu(self, flat: Flat | frozenset) -> int:
        edges = flat.edges if isinstance(flat, Flat) else frozenset(flat)
        return self.mobius[self._index[edges]]

    def leq(self, f1: Flat, f2: Flat) -> bool:
        return f1.edges <= f2.edges

    def dump(self) -> str:
        order = {e: i for i, e in enumerate(self.graph.edges)}
        lines = []
        for f, m in self:
            names = ",".join(str(e) for e in sorted(f.edges, key=order.__getitem__))
            lines.append(f"rank={f.rank} mu={m} type={f.type} edges={{{names}}}")
        return "\n".join(lines) + "\n"


def _sort_key(g: SignedGraph):
    order = {e: i for i, e in enumerate(g.edges)}
    return lambda f: (f.rank, tuple(sorted(order[e] for e in f.edges)))


def enumerate_flats(g: SignedGraph, cap: int = DEFAULT_FLAT_CAP) -> FlatLattice:
    if g.n_edges > cap:
        raise CapExceeded(f"{g.n_edges} edges exceeds the flat-lattice cap {cap}")
    bottom = closure(g, ())
    levels = [[bottom]]
    seen = {bottom.edges}
    while True:
        nxt = []
        for f in levels[-1]:
            for e in g.edges:
                if e in f.edges:
                    continue
                c = closure(g, f.edges | {e})
                if c.edges not in seen:
                    seen.add(c.edges)
                    nxt.append(c)
        if not nxt:
            break
        levels.append(nxt)
    flats = sorted((f for level in levels for f in level), key=_sort_key(g))
    mobius = []
    for i, f in enumerate(flats):
        if i == 0:
            mobius.append(1)
            continue
        mobius.append(-sum(mobius[j] for j in range(i) if flats[j].rank < f.rank and flats[j].edges < f.edges))
    return FlatLattice(g, flats, mobius)


def characteristic_polynomial(lattice: FlatLattice, ambient_dim: int | None = None) -> list[int]:
    """Coefficients of ``sum_F mu(0, F) t^(dim - rank F)`` in ascending degree."""
    ell = lattice.graph.n_vertices if ambient_dim is None else ambient_dim
    coeffs = [0] * (ell + 1)
    for f, m in lattice:
        coeffs[ell - f.rank] += m
    return coeffs


def evaluate(coeffs: Sequence[int], t: int) -> int:
    return sum(c * t**k for k, c in enumerate(coeffs))


def _satisfies(e: EdgeRef, point: Sequence[int]) -> bool:
    if e.kind is EdgeKind.LOOP:
        return point[e.endpoints[0] - 1] == 0
    i, j = e.endpoints
    if e.kind is EdgeKind.POSITIVE:
        return point[i - 1] == point[j - 1]
    return point[i - 1] == -point[j - 1]


def localization_flat(g: SignedGraph, point: Sequence[int]) -> Flat:
    """Flat of all edges whose hyperplane contains ``point``."""
    if len(point) != g.n_vertices:
        raise ValueError(f"point has length {len(point)}, expected {g.n_vertices}")
    edges = frozenset(e for e in g.edges if _satisfies(e, point))
    f = _flat(g, edges)
    if closure(g, edges).edges != edges:
        raise VerificationError(f"edges through {tuple(point)} are not closed")
    return f


def multiplicity(g: SignedGraph, point: Sequence[int], cap: int = DEFAULT_FLAT_CAP) -> int:
    """Number of chamber closures containing ``point``, as ``|chi(-1)|`` of the localization."""
    local = g.subgraph(localization_flat(g, point).edges)
    return abs(evaluate(characteristic_polynomial(enumerate_flats(local, cap)), -1))
