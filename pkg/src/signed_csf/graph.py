"""Signed graphs, balance analysis and the type of an edge subset.

A signed graph on vertices ``1..n`` carries positive edges, negative edges
and loops.  A positive and a negative edge may join the same pair (an
unbalanced 2-cycle); same-sign parallel edges are not representable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import GraphFormatError
from .partitions import PartitionType, canonicalize

__all__ = [
    "EdgeKind",
    "EdgeRef",
    "SignedGraph",
    "BalanceDecomposition",
    "parse_graph",
    "format_graph",
    "decompose",
    "type_of_subset",
    "is_balanced",
    "disjoint_union",
    "connected_components",
    "component_vertex_sets",
]


class EdgeKind(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    LOOP = "o"

    def __lt__(self, other):
        return _KIND_ORDER[self] < _KIND_ORDER[other]


_KIND_ORDER = {EdgeKind.POSITIVE: 0, EdgeKind.NEGATIVE: 1, EdgeKind.LOOP: 2}


class EdgeRef(NamedTuple):
    """One element of the edge set; ``endpoints`` is ``(i, j)`` with ``i < j`` or ``(v,)``."""

    kind: EdgeKind
    endpoints: tuple[int, ...]

    @classmethod
    def positive(cls, i: int, j: int) -> EdgeRef:
        return cls(EdgeKind.POSITIVE, _pair(i, j))

    @classmethod
    def negative(cls, i: int, j: int) -> EdgeRef:
        return cls(EdgeKind.NEGATIVE, _pair(i, j))

    @classmethod
    def loop(cls, v: int) -> EdgeRef:
        return cls(EdgeKind.LOOP, (int(v),))

    def __str__(self):
        return f"{self.kind.value}" + ",".join(map(str, self.endpoints))


def _pair(i, j):
    i, j = int(i), int(j)
    if i == j:
        raise ValueError(f"edge endpoints must be distinct, got {{{i},{j}}}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph on vertices ``1..n_vertices``."""

    n_vertices: int
    pos_edges: frozenset = field(default_factory=frozenset)
    neg_edges: frozenset = field(default_factory=frozenset)
    loops: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.n_vertices
        if n < 0:
            raise ValueError("n_vertices must be nonnegative")
        for name in ("pos_edges", "neg_edges"):
            pairs = frozenset(_pair(*e) for e in getattr(self, name))
            for i, j in pairs:
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError(f"edge {{{i},{j}}} out of range 1..{n}")
            object.__setattr__(self, name, pairs)
        loops = frozenset(int(v) for v in self.loops)
        for v in loops:
            if not 1 <= v <= n:
                raise ValueError(f"loop at {v} out of range 1..{n}")
        object.__setattr__(self, "loops", loops)

    @classmethod
    def build(cls, n: int, pos=(), neg=(), loops=()) -> SignedGraph:
        """Build from iterables, rejecting duplicate entries."""
        for name, items in (("positive edge", pos), ("negative edge", neg)):
            seen = set()
            for e in items:
                key = _pair(*e)
                if key in seen:
                    raise ValueError(f"duplicate {name} {{{key[0]},{key[1]}}}")
                seen.add(key)
        if len(set(loops)) != len(list(loops)):
            raise ValueError("duplicate loop")
        return cls(n, frozenset(pos), frozenset(neg), frozenset(loops))

    @property
    def edges(self) -> tuple[EdgeRef, ...]:
        """All edges in canonical order: positive, negative, loops, each sorted."""
        return (
            tuple(EdgeRef(EdgeKind.POSITIVE, e) for e in sorted(self.pos_edges))
            + tuple(EdgeRef(EdgeKind.NEGATIVE, e) for e in sorted(self.neg_edges))
            + tuple(EdgeRef(EdgeKind.LOOP, (v,)) for v in sorted(self.loops))
        )

    @property
    def n_edges(self) -> int:
        return len(self.pos_edges) + len(self.neg_edges) + len(self.loops)

    def has_edge(self, e: EdgeRef) -> bool:
        if e.kind is EdgeKind.POSITIVE:
            return e.endpoints in self.pos_edges
        if e.kind is EdgeKind.NEGATIVE:
            return e.endpoints in self.neg_edges
        return e.endpoints[0] in self.loops

    def subgraph(self, s: Iterable[EdgeRef]) -> SignedGraph:
        """The signed graph on the same vertex set with edge set ``s``."""
        s = _checked(self, s)
        return SignedGraph(
            self.n_vertices,
            frozenset(e.endpoints for e in s if e.kind is EdgeKind.POSITIVE),
            frozenset(e.endpoints for e in s if e.kind is EdgeKind.NEGATIVE),
            frozenset(e.endpoints[0] for e in s if e.kind is EdgeKind.LOOP),
        )

    def positive_part(self) -> SignedGraph:
        """``Gamma^+``: drop negative edges and loops."""
        return SignedGraph(self.n_vertices, self.pos_edges)

    def __str__(self):
        return format_graph(self).replace("\n", "; ").rstrip("; ")


# -- file format -------------------------------------------------------------


def parse_graph(text: str) -> SignedGraph:
    """Parse the line-oriented graph format (``v n``, ``+ i j``, ``- i j``, ``o i``)."""
    n = None
    pos, neg, loops = [], [], []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        tag, args = tok[0], tok[1:]
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise GraphFormatError(f"non-integer argument in {line!r}", lineno) from None
        if n is None:
            if tag != "v" or len(nums) != 1:
                raise GraphFormatError("first record must be 'v <n>'", lineno)
            if nums[0] < 0:
                raise GraphFormatError(f"negative vertex count {nums[0]}", lineno)
            n = nums[0]
            continue
        if tag == "v":
            raise GraphFormatError("repeated 'v' record", lineno)
        if tag in ("+", "-"):
            if len(nums) != 2:
                raise GraphFormatError(f"'{tag}' expects two vertices", lineno)
            i, j = nums
            if i == j:
                raise GraphFormatError(f"self pair {{{i},{j}}} in edge list; use 'o {i}'", lineno)
            key = (tag, min(i, j), max(i, j))
            target = pos if tag == "+" else neg
        elif tag == "o":
            if len(nums) != 1:
                raise GraphFormatError("'o' expects one vertex", lineno)
            key = ("o", nums[0])
            target = loops
        else:
            raise GraphFormatError(f"unknown record type {tag!r}", lineno)
        for v in nums:
            if not 1 <= v <= n:
                raise GraphFormatError(f"vertex {v} out of range 1..{n}", lineno)
        if key in seen:
            raise GraphFormatError(f"duplicate record {line!r}", lineno)
        seen.add(key)
        target.append(tuple(nums) if tag != "o" else nums[0])
    if n is None:
        raise GraphFormatError("missing 'v <n>' record")
    return SignedGraph(n, frozenset(pos), frozenset(neg), frozenset(loops))


def format_graph(g: SignedGraph) -> str:
    lines = [f"v {g.n_vertices}"]
    for e in g.edges:
        lines.append(f"{e.kind.value} " + " ".join(map(str, e.endpoints)))
    return "\n".join(lines) + "\n"


# -- balance -----------------------------------------------------------------


@dataclass(frozen=True)
class BalanceDecomposition:
    """Vertices of unbalanced components, and the Harary split of each balanced one.

    ``balanced_parts`` is ordered by smallest vertex; ``A_j`` holds that vertex.
    """

    unbalanced_vertices: frozenset
    balanced_parts: tuple[tuple[frozenset, frozenset], ...]

    @property
    def type(self) -> PartitionType:
        return canonicalize(
            len(self.unbalanced_vertices),
            [(len(a), len(b)) for a, b in self.balanced_parts],
        )


def _checked(g: SignedGraph, s) -> list[EdgeRef]:
    s = list(s)
    for e in s:
        if not g.has_edge(e):
            raise ValueError(f"{e} is not an edge of the graph")
    return s


def decompose(g: SignedGraph, s: Iterable[EdgeRef]) -> BalanceDecomposition:
    """Connected components of ``(V, s)`` split into unbalanced ones and Harary bipartitions."""
    s = _checked(g, s)
    n = g.n_vertices
    adj = [[] for _ in range(n + 1)]
    looped = set()
    for e in s:
        if e.kind is EdgeKind.LOOP:
            looped.add(e.endpoints[0])
            continue
        i, j = e.endpoints
        flip = 1 if e.kind is EdgeKind.NEGATIVE else 0
        adj[i].append((j, flip))
        adj[j].append((i, flip))

    side = [-1] * (n + 1)
    unbalanced = set()
    parts = []
    for root in range(1, n + 1):
        if side[root] >= 0:
            continue
        side[root] = 0
        comp = [root]
        stack = [root]
        ok = True
        while stack:
            v = stack.pop()
            if v in looped:
                ok = False
            for w, flip in adj[v]:
                want = side[v] ^ flip
                if side[w] < 0:
                    side[w] = want
                    comp.append(w)
                    stack.append(w)
                elif side[w] != want:
                    ok = False
        if ok:
            a = frozenset(v for v in comp if side[v] == 0)
            b = frozenset(v for v in comp if side[v] == 1)
            parts.append((a, b))
        else:
            unbalanced.update(comp)
    return BalanceDecomposition(frozenset(unbalanced), tuple(parts))


def type_of_subset(g: SignedGraph, s: Iterable[EdgeRef]) -> PartitionType:
    return decompose(g, s).type


def is_balanced(g: SignedGraph, s: Iterable[EdgeRef]) -> bool:
    return not decompose(g, s).unbalanced_vertices


# -- structural operations ---------------------------------------------------


def disjoint_union(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    k = g1.n_vertices
    return SignedGraph(
        g1.n_vertices + g2.n_vertices,
        g1.pos_edges | {(i + k, j + k) for i, j in g2.pos_edges},
        g1.neg_edges | {(i + k, j + k) for i, j in g2.neg_edges},
        g1.loops | {v + k for v in g2.loops},
    )


def component_vertex_sets(g: SignedGraph) -> list[list[int]]:
    """Sorted vertex lists of the connected components, ordered by smallest vertex."""
    parent = list(range(g.n_vertices + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in g.pos_edges | g.neg_edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for v in range(1, g.n_vertices + 1):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def connected_components(g: SignedGraph) -> list[SignedGraph]:
    """Components in order of smallest vertex, each renumbered to ``1..k``."""
    out = []
    for verts in component_vertex_sets(g):
        local = {v: idx for idx, v in enumerate(verts, start=1)}
        out.append(
            SignedGraph(
                len(verts),
                frozenset((local[i], local[j]) for i, j in g.pos_edges if i in local),
                frozenset((local[i], local[j]) for i, j in g.neg_edges if i in local),
                frozenset(local[v] for v in g.loops if v in local),
            )
        )
    return out
