"""Signed paths ``P_alpha`` and the search for distinct paths with equal ``X``.

``P_alpha`` glues all-positive paths on ``alpha_1, ..., alpha_l`` vertices
with single negative edges, in order.  Two such paths are isomorphic exactly
when the compositions agree up to reversal.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .chromatic import x_subset
from .errors import CapExceeded
from .graph import SignedGraph, type_of_subset
from .partitions import PartitionType
from .ssym import SSymFunction, parse_ssym, serialize

__all__ = [
    "DEFAULT_PATH_CAP",
    "compositions",
    "representative",
    "build_path",
    "path_isomorphic",
    "is_unimodal",
    "fingerprint",
    "CollisionReport",
    "search_collisions",
    "block_statistics",
    "block_statistics_direct",
    "MainTheoremRecord",
    "verify_main_theorem",
]

DEFAULT_PATH_CAP = 12

Composition = tuple[int, ...]


def _check(alpha) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if not alpha or any(a < 1 for a in alpha):
        raise ValueError(f"not a composition: {alpha}")
    return alpha


def compositions(n: int) -> Iterator[Composition]:
    """All ``2^(n-1)`` compositions of ``n`` in lexicographic order."""
    if n < 1:
        return

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first):
                yield (first,) + tail

    yield from rec(n)


def representative(alpha: Sequence[int]) -> Composition:
    """Lexicographically smaller of ``alpha`` and its reverse."""
    alpha = _check(alpha)
    return min(alpha, alpha[::-1])


def build_path(alpha: Sequence[int]) -> SignedGraph:
    alpha = _check(alpha)
    pos, neg = [], []
    v = 1
    for k, size in enumerate(alpha):
        for _ in range(size - 1):
            pos.append((v, v + 1))
            v += 1
        if k + 1 < len(alpha):
            neg.append((v, v + 1))
            v += 1
    return SignedGraph(sum(alpha), frozenset(pos), frozenset(neg))


def path_isomorphic(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    alpha, beta = _check(alpha), _check(beta)
    return alpha == beta or alpha == beta[::-1]


def is_unimodal(alpha: Sequence[int]) -> bool:
    alpha = _check(alpha)
    t = 0
    while t + 1 < len(alpha) and alpha[t] <= alpha[t + 1]:
        t += 1
    return all(alpha[k] >= alpha[k + 1] for k in range(t, len(alpha) - 1))


def fingerprint(alpha: Sequence[int]) -> str:
    """Canonical serialization of ``X`` of ``P_alpha``."""
    return serialize(x_subset(build_path(alpha)))


def _render_comp(alpha) -> str:
    return ",".join(map(str, alpha))


@dataclass
class CollisionReport:
    n: int
    classes: list
    fingerprints: dict = field(repr=False)
    groups: list = field(default_factory=list)

    @property
    def violations(self) -> list:
        """Groups holding pairwise non-isomorphic compositions with one fingerprint."""
        out = []
        for grp in self.groups:
            if any(not path_isomorphic(a, b) for i, a in enumerate(grp) for b in grp[i + 1 :]):
                out.append(grp)
        return out

    def render(self) -> str:
        viol = self.violations
        lines = [f"n={self.n} classes={len(self.classes)} collisions={len(viol)}"]
        for grp in viol:
            lines.append(" ".join(_render_comp(a) for a in grp))
        return "\n".join(lines) + "\n"


def search_collisions(n: int, cap: int = DEFAULT_PATH_CAP, threads: int = 1) -> CollisionReport:
    """Group the reversal classes of compositions of ``n`` by the fingerprint of ``P_alpha``."""
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the path-search cap {cap}")
    classes = sorted({representative(a) for a in compositions(n)})
    if threads > 1 and len(classes) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            prints = list(pool.map(fingerprint, classes, chunksize=max(1, len(classes) // (4 * threads))))
    else:
        prints = [fingerprint(a) for a in classes]
    fps = dict(zip(classes, prints))
    by_print = defaultdict(list)
    for alpha in classes:
        by_print[fps[alpha]].append(alpha)
    groups = sorted(g for g in by_print.values() if len(g) > 1)
    return CollisionReport(n, classes, fps, groups)


# -- block statistics -------------------------------------------------------


def block_statistics(alpha: Sequence[int], x: SSymFunction | str | None = None) -> dict[tuple[int, int], int]:
    """Number of edge subsets by (components ``r``, components without negative edges ``p``), read off ``X``.

    For a tree every component of every subset is balanced, and subsets of a
    given type all have ``n - r`` edges, so ``|coefficient|`` counts them.
    """
    if x is None:
        x = x_subset(build_path(alpha))
    elif isinstance(x, str):
        x = parse_ssym(x)
    out = defaultdict(int)
    for key, c in x.items():
        r = len(key.columns)
        p = sum(1 for _, b in key.columns if b == 0)
        out[(r, p)] += abs(c)
    return dict(sorted(out.items()))


def block_statistics_direct(alpha: Sequence[int]) -> dict[tuple[int, int], int]:
    """Same counts by enumerating edge subsets of ``P_alpha`` directly."""
    g = build_path(alpha)
    n = g.n_vertices
    # on a path, vertex v and v+1 are joined by edge index v-1
    signs = []
    for v in range(1, n):
        signs.append(-1 if (v, v + 1) in g.neg_edges else 1)
    out = defaultdict(int)
    m = len(signs)
    for mask in range(1 << m):
        r = p = 0
        has_neg = False
        for k in range(m + 1):
            # component boundary after vertex k+1 when edge k is absent
            if k < m and mask >> k & 1:
                has_neg = has_neg or signs[k] < 0
                continue
            r += 1
            if not has_neg:
                p += 1
            has_neg = False
        out[(r, p)] += 1
    return dict(sorted(out.items()))


def full_edge_type(alpha: Sequence[int]) -> PartitionType:
    g = build_path(alpha)
    return type_of_subset(g, g.edges)


# -- consequences checked on the corpus ------------------------------------


@dataclass
class MainTheoremRecord:
    n: int
    pairs_checked: int
    length_violations: list
    unimodal_violations: list
    parts_violations: list
    full_type_violations: list

    @property
    def passed(self) -> bool:
        return not (
            self.length_violations or self.unimodal_violations or self.parts_violations or self.full_type_violations
        )


def verify_main_theorem(n: int, report: CollisionReport | None = None, **kwargs) -> MainTheoremRecord:
    """Check, inside every fingerprint-collision group, the consequences proven for signed paths.

    A colliding non-isomorphic pair must have length > 4, must not be both
    unimodal, must share the multiset of parts, and must share ``type(E)``.
    """
    if report is None:
        report = search_collisions(n, **kwargs)
    pairs = 0
    length_v, unimodal_v, parts_v, type_v = [], [], [], []
    for grp in report.groups:
        for i, a in enumerate(grp):
            for b in grp[i + 1 :]:
                pairs += 1
                if path_isomorphic(a, b):
                    continue
                if len(a) <= 4 or len(b) <= 4:
                    length_v.append((a, b))
                if is_unimodal(a) and is_unimodal(b):
                    unimodal_v.append((a, b))
                if sorted(a) != sorted(b):
                    parts_v.append((a, b))
                if full_edge_type(a) != full_edge_type(b):
                    type_v.append((a, b))
    return MainTheoremRecord(n, pairs, length_v, unimodal_v, parts_v, type_v)
