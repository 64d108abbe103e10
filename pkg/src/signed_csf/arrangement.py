"""Geometric oracles on the signed-graphic arrangement.

Hyperplanes: ``z_i - z_j = 0`` for a positive edge, ``z_i + z_j = 0`` for a
negative edge, ``z_i = 0`` for a loop.  A sign vector is a chamber when the
open cone ``{sigma_e * form_e(z) > 0}`` is nonempty.  Because the cone is
homogeneous this is equivalent to feasibility of ``sigma_e * form_e(z) >= 1``,
which is decided exactly by Fourier-Motzkin elimination over the integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import CapExceeded, VerificationError
from .flats import DEFAULT_FLAT_CAP, characteristic_polynomial, enumerate_flats, evaluate, localization_flat
from .graph import EdgeKind, SignedGraph
from .ssym import TruncatedPolynomial

__all__ = [
    "SignVector",
    "ChamberSet",
    "edge_forms",
    "feasible_point",
    "enumerate_chambers",
    "closure_contains",
    "brute_x_truncated",
    "brute_xbar_truncated",
    "multiplicity_crosscheck",
    "MultiplicityReport",
    "MAX_CHAMBER_VERTICES",
    "MAX_CHAMBER_EDGES",
]

MAX_CHAMBER_VERTICES = 5
MAX_CHAMBER_EDGES = 12
DEFAULT_COLORING_BUDGET = 10**7


def edge_forms(g: SignedGraph) -> tuple[tuple[int, ...], ...]:
    """Integer normal vectors of the hyperplanes, in the graph's edge order."""
    forms = []
    for e in g.edges:
        f = [0] * g.n_vertices
        if e.kind is EdgeKind.LOOP:
            f[e.endpoints[0] - 1] = 1
        else:
            i, j = e.endpoints
            f[i - 1] = 1
            f[j - 1] = -1 if e.kind is EdgeKind.POSITIVE else 1
        forms.append(tuple(f))
    return tuple(forms)


# -- exact feasibility -----------------------------------------------------


def _normalize(coeffs, rhs):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, rhs)
    if g > 1:
        return tuple(c // g for c in coeffs), rhs // g
    return tuple(coeffs), rhs


def feasible_point(rows: Sequence[tuple[Sequence[int], int]], nvars: int) -> tuple[Fraction, ...] | None:
    """A rational point with ``sum c_k z_k >= rhs`` for every row, or None if none exists.

    Variables are eliminated in index order; the rows touching each
    eliminated variable are kept for back-substitution.
    """
    current = {_normalize(tuple(c), r) for c, r in rows}
    history = []
    for k in range(nvars):
        lower, upper, rest = [], [], set()
        for c, r in current:
            if c[k] > 0:
                lower.append((c, r))
            elif c[k] < 0:
                upper.append((c, r))
            else:
                rest.add((c, r))
        history.append((lower, upper))
        for cl, rl in lower:
            for cu, ru in upper:
                a, b = -cu[k], cl[k]
                comb = tuple(a * x + b * y for x, y in zip(cl, cu))
                rest.add(_normalize(comb, a * rl + b * ru))
        current = rest
    # all coefficients are zero now: need 0 >= rhs
    if any(r > 0 for _, r in current):
        return None
    z = [Fraction(0)] * nvars
    for k in range(nvars - 1, -1, -1):
        lower, upper = history[k]

        def bound(c, r):
            s = sum(c[j] * z[j] for j in range(k + 1, nvars))
            return Fraction(r - s, c[k])

        lo = max((bound(c, r) for c, r in lower), default=None)
        hi = min((bound(c, r) for c, r in upper), default=None)
        if lo is not None and hi is not None:
            z[k] = (lo + hi) / 2
        elif lo is not None:
            z[k] = lo
        elif hi is not None:
            z[k] = hi
    return tuple(z)


# -- chambers ---------------------------------------------------------------


@dataclass(frozen=True)
class SignVector:
    """Chamber candidate: ``signs[e] * form_e(z) > 0`` for every hyperplane."""

    signs: tuple[int, ...]
    forms: tuple[tuple[int, ...], ...] = field(repr=False)
    witness: tuple[Fraction, ...] | None = None

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def render(self) -> str:
        w = " ".join(str(x) for x in self.witness) if self.witness is not None else ""
        return f"{self} {w}".rstrip()


@dataclass
class ChamberSet:
    feasible: list
    graph: SignedGraph | None = None

    @property
    def count(self) -> int:
        return len(self.feasible)

    def __len__(self):
        return len(self.feasible)

    def dump(self) -> str:
        return "".join(sv.render() + "\n" for sv in self.feasible)


def _rows(forms, signs):
    return [(tuple(s * x for x in f), 1) for f, s in zip(forms, signs)]


def enumerate_chambers(
    g: SignedGraph,
    max_vertices: int = MAX_CHAMBER_VERTICES,
    max_edges: int = MAX_CHAMBER_EDGES,
) -> ChamberSet:
    """All feasible sign vectors with rational witness points, sorted ``+`` before ``-``.

    Sign vectors are grown one hyperplane at a time; an infeasible prefix has
    no feasible extension, so it is not expanded further.
    """
    if g.n_vertices > max_vertices:
        raise CapExceeded(f"{g.n_vertices} vertices exceeds the chamber cap {max_vertices}")
    if g.n_edges > max_edges:
        raise CapExceeded(f"{g.n_edges} edges exceeds the chamber cap {max_edges}")
    forms = edge_forms(g)
    ell, m = g.n_vertices, len(forms)
    out = []

    def grow(prefix):
        point = feasible_point(_rows(forms, prefix), ell)
        if point is None:
            return
        if len(prefix) == m:
            out.append(SignVector(tuple(prefix), forms, point))
            return
        for s in (1, -1):
            grow(prefix + [s])

    grow([])
    for sv in out:
        _check_witness(sv)
    out.sort(key=lambda sv: tuple(-s for s in sv.signs))
    return ChamberSet(out, g)


def _check_witness(sv: SignVector):
    for f, s in zip(sv.forms, sv.signs):
        if s * sum(a * b for a, b in zip(f, sv.witness)) <= 0:
            raise VerificationError(f"witness {sv.witness} violates {sv}")


def closure_contains(sv: SignVector, point: Sequence[int]) -> bool:
    """Whether ``point`` lies in the closure of the chamber ``sv``."""
    if sv.forms and len(point) != len(sv.forms[0]):
        raise ValueError("point length does not match the arrangement dimension")
    for f, s in zip(sv.forms, sv.signs):
        v = sum(a * b for a, b in zip(f, point))
        if v and (v > 0) != (s > 0):
            return False
    return True


# -- brute-force truncations ------------------------------------------------


def _points(ell, N):
    return itertools.product(range(-N, N + 1), repeat=ell)


def brute_x_truncated(g: SignedGraph, N: int, budget: int = DEFAULT_COLORING_BUDGET) -> TruncatedPolynomial:
    """Sum of ``x_kappa`` over proper colorings ``kappa: V -> [-N, N]``."""
    ell = g.n_vertices
    if (2 * N + 1) ** ell > budget:
        raise CapExceeded(f"(2N+1)^ell = {(2 * N + 1) ** ell} exceeds the coloring budget {budget}")
    pos = [(i - 1, j - 1) for i, j in g.pos_edges]
    neg = [(i - 1, j - 1) for i, j in g.neg_edges]
    loops = [v - 1 for v in g.loops]
    out = TruncatedPolynomial(N, {})
    for k in _points(ell, N):
        if any(k[v] == 0 for v in loops):
            continue
        if any(k[i] == k[j] for i, j in pos):
            continue
        if any(k[i] == -k[j] for i, j in neg):
            continue
        out.add_monomial(k)
    return out


def brute_xbar_truncated(g: SignedGraph, N: int, chambers: ChamberSet | None = None) -> TruncatedPolynomial:
    """Sum over ``alpha`` in ``[-N, N]^ell`` of (number of chamber closures containing alpha) ``x_alpha``."""
    if chambers is None:
        chambers = enumerate_chambers(g)
    out = TruncatedPolynomial(N, {})
    for alpha in _points(g.n_vertices, N):
        c = sum(1 for sv in chambers.feasible if closure_contains(sv, alpha))
        if c:
            out.add_monomial(alpha, c)
    return out


@dataclass
class MultiplicityReport:
    radius: int
    checked: int
    mismatches: list

    @property
    def passed(self) -> bool:
        return not self.mismatches


def multiplicity_crosscheck(
    g: SignedGraph, N: int, chambers: ChamberSet | None = None, cap: int = DEFAULT_FLAT_CAP
) -> MultiplicityReport:
    """Compare closure-containment counts with ``|chi(-1)|`` of the localization at every point."""
    if chambers is None:
        chambers = enumerate_chambers(g)
    mismatches = []
    checked = 0
    by_flat = {}
    for alpha in _points(g.n_vertices, N):
        geometric = sum(1 for sv in chambers.feasible if closure_contains(sv, alpha))
        z = localization_flat(g, alpha).edges
        if z not in by_flat:
            lat = enumerate_flats(g.subgraph(z), cap)
            by_flat[z] = abs(evaluate(characteristic_polynomial(lat), -1))
        lattice = by_flat[z]
        checked += 1
        if geometric != lattice:
            mismatches.append((alpha, geometric, lattice))
    return MultiplicityReport(N, checked, mismatches)
