"""Acceptance checks, one per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or
``python tests/test_acceptance.py`` for a plain summary.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import monomial_truncated, random_table  # noqa: E402
from oracles import circuit_flats, count_colorings  # noqa: E402
from signed_csf.arrangement import (  # noqa: E402
    brute_x_truncated,
    brute_xbar_truncated,
    enumerate_chambers,
    multiplicity_crosscheck,
)
from signed_csf.chromatic import (  # noqa: E402
    chromatic_polynomials,
    connectivity_certificate,
    is_connected,
    x_flats,
    x_subset,
    xbar_flats,
)
from signed_csf.corpus import standard_corpus  # noqa: E402
from signed_csf.errors import VerificationError  # noqa: E402
from signed_csf.flats import characteristic_polynomial, enumerate_flats, evaluate, rank  # noqa: E402
from signed_csf.graph import SignedGraph, disjoint_union  # noqa: E402
from signed_csf.partitions import parse_partition_type  # noqa: E402
from signed_csf.paths import (  # noqa: E402
    block_statistics,
    block_statistics_direct,
    compositions,
    search_collisions,
    verify_main_theorem,
)
from signed_csf.ssym import SSymFunction, iota, omega, pi, specialize, triangularity_report, truncate  # noqa: E402

THREADS = 8


@lru_cache(maxsize=None)
def corpus() -> tuple[SignedGraph, ...]:
    return tuple(standard_corpus())


@lru_cache(maxsize=None)
def x_of(g: SignedGraph) -> SSymFunction:
    return x_subset(g)


@lru_cache(maxsize=None)
def lattice_of(g: SignedGraph):
    return enumerate_flats(g)


def report(number: int, ok: bool, detail: str, elapsed: float) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail} ({elapsed:.1f}s)")


def _failures(graphs, check):
    return [g for g in graphs if not check(g)]


# -- criteria -----------------------------------------------------------------


def criterion_1():
    bad = _failures(corpus(), lambda g: truncate(x_of(g), g.n_vertices) == brute_x_truncated(g, g.n_vertices))
    return not bad, f"truncated X equals brute-force colorings on {len(corpus())} graphs, {len(bad)} mismatches"


def criterion_2():
    bad = _failures(corpus(), lambda g: x_of(g) == x_flats(g))
    return not bad, f"subset and flat expansions of X agree on {len(corpus())} graphs, {len(bad)} mismatches"


def criterion_3():
    bad = _failures(corpus(), lambda g: omega(x_of(g)) == xbar_flats(g))
    return not bad, f"omega(X) equals Xbar on {len(corpus())} graphs, {len(bad)} mismatches"


def criterion_4():
    graphs = [g for g in corpus() if g.n_vertices <= 3]
    bad_xbar = bad_mult = 0
    for g in graphs:
        chambers = enumerate_chambers(g)
        if brute_xbar_truncated(g, 2, chambers) != truncate(xbar_flats(g), 2):
            bad_xbar += 1
        if not multiplicity_crosscheck(g, 2, chambers).passed:
            bad_mult += 1
    ok = bad_xbar == 0 and bad_mult == 0
    return ok, f"geometric Xbar at N=2 on {len(graphs)} graphs: {bad_xbar} Xbar and {bad_mult} multiplicity mismatches"


def criterion_5():
    graphs = [g for g in corpus() if g.n_vertices <= 4 and g.n_edges <= 8]
    bad = _failures(
        graphs, lambda g: len(enumerate_chambers(g)) == abs(evaluate(characteristic_polynomial(lattice_of(g)), -1))
    )
    return not bad, f"chamber count equals |chi(-1)| on {len(graphs)} graphs, {len(bad)} mismatches"


def criterion_6():
    bad_counts = bad_poly = 0
    for g in corpus():
        x = x_of(g)
        for n in range(4):
            if specialize(x, n) != count_colorings(g, n) or specialize(x, n, True) != count_colorings(g, n, True):
                bad_counts += 1
        try:
            chi, chi_star = chromatic_polynomials(g, x)
        except VerificationError:
            bad_poly += 1
            continue
        if len(chi) != g.n_vertices + 1 or chi[-1] != 1 or len(chi_star) != g.n_vertices + 1 or chi_star[-1] != 1:
            bad_poly += 1
    k3 = SignedGraph(3, frozenset({(1, 2), (2, 3), (1, 3)}))
    p3 = SignedGraph(3, frozenset({(1, 2), (2, 3)}))
    named = chromatic_polynomials(k3)[0] == [0, 2, -3, 1] and chromatic_polynomials(p3)[0] == [0, 1, -2, 1]
    ok = bad_counts == 0 and bad_poly == 0 and named
    return ok, (
        f"specialisations match coloring counts ({bad_counts} mismatches), "
        f"{bad_poly} non-monic or non-integer polynomials, K3 and P3 values {'ok' if named else 'wrong'}"
    )


def remark_identity_checks():
    """The two-column identity as printed, and the form that holds under the monomial-type definition."""
    p, x0 = SSymFunction.p, SSymFunction.x0()
    key = parse_partition_type("(0; 1/0 1/0)")
    printed = p(1) ** 2 - p(2) - 2 * x0 * p(1) + 2 * x0**2
    corrected = printed - p(1, 1) + x0**2
    out = {}
    for name, rhs in (("printed", printed), ("corrected", corrected)):
        out[name] = all(truncate(rhs, N) == monomial_truncated(key, N).scaled(2) for N in (1, 2, 3))
    return out


def criterion_7():
    rng = random.Random(7)
    bad_laws = 0
    for _ in range(100):
        f, g = random_table(rng), random_table(rng)
        laws = (
            omega(omega(f)) == f,
            omega(f + g) == omega(f) + omega(g),
            omega(f * g) == omega(f) * omega(g),
            pi(omega(f)) == pi(f).omega(),
            iota(pi(f).omega()) == omega(iota(pi(f))),
        )
        bad_laws += not all(laws)
    tri = triangularity_report(4)
    remark = remark_identity_checks()
    ok = bad_laws == 0 and tri.passed and remark["printed"]
    detail = (
        f"algebra laws on 100 random table pairs ({bad_laws} failures); "
        f"triangularity to degree 4 {'passes' if tri.passed else 'fails'} on {len(tri.entries)} entries; "
        f"two-column identity as printed {'holds' if remark['printed'] else 'does NOT hold'}, "
        f"corrected identity (extra -p(1;1) + x0^2) {'holds' if remark['corrected'] else 'does not hold'}"
    )
    return ok, detail


def criterion_8():
    bad_sub = bad_sign = bad_circuit = 0
    circuit_checked = 0
    for g in corpus():
        lat = lattice_of(g)
        flats = [f for f, _ in lat]
        for f, m in lat:
            if m == 0 or (m > 0) != (f.rank % 2 == 0):
                bad_sign += 1
        ranks = {f.edges: f.rank for f in flats}
        for a, b in itertools.combinations(flats, 2):
            if ranks[a.edges] + ranks[b.edges] < rank(g, a.edges | b.edges) + rank(g, a.edges & b.edges):
                bad_sub += 1
        if g.n_edges <= 6:
            circuit_checked += 1
            if set(ranks) != circuit_flats(g):
                bad_circuit += 1
    ok = bad_sub == bad_sign == bad_circuit == 0
    return ok, (
        f"submodularity on flat pairs ({bad_sub} failures), Rota sign ({bad_sign} failures), "
        f"circuit-defined flats on {circuit_checked} graphs ({bad_circuit} mismatches)"
    )


def criterion_9():
    violations = parts = 0
    for n in range(1, 11):
        rep = search_collisions(n, threads=THREADS if n >= 9 else 1)
        violations += len(rep.violations)
        parts += len(verify_main_theorem(n, rep).parts_violations)
    bad_blocks = 0
    total = 0
    for n in range(1, 9):
        for alpha in compositions(n):
            total += 1
            bad_blocks += block_statistics(alpha) != block_statistics_direct(alpha)
    ok = violations == 0 and bad_blocks == 0 and parts == 0
    return ok, (
        f"path search n<=10: {violations} violating groups; block statistics on {total} compositions "
        f"({bad_blocks} mismatches); multiset-of-parts failures {parts}"
    )


def criterion_10():
    rng = random.Random(10)
    graphs = corpus()
    bad_mult = 0
    for _ in range(100):
        g, h = rng.choice(graphs), rng.choice(graphs)
        bad_mult += x_subset(disjoint_union(g, h)) != x_of(g) * x_of(h)
    bad_conn = _failures(graphs, lambda g: connectivity_certificate(g, x_of(g)) == is_connected(g))
    ok = bad_mult == 0 and not bad_conn
    return ok, f"multiplicativity on 100 pairs ({bad_mult} failures); connectivity on {len(graphs)} graphs ({len(bad_conn)} failures)"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


def run_criterion(number):
    start = time.perf_counter()
    ok, detail = CRITERIA[number]()
    report(number, ok, detail, time.perf_counter() - start)
    return ok, detail


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = run_criterion(number)
    assert ok, detail


if __name__ == "__main__":
    results = [run_criterion(i)[0] for i in sorted(CRITERIA)]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
