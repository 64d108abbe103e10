"""Graph corpora for exhaustive and sampled checks."""

from __future__ import annotations

import itertools
import random

from .graph import SignedGraph

# each vertex pair carries: nothing, +, -, or both
_PAIR_STATES = ((False, False), (True, False), (False, True), (True, True))


def all_signed_graphs(n: int):
    """Every signed graph on ``n`` labelled vertices (``4^C(n,2) * 2^n`` of them)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for states in itertools.product(_PAIR_STATES, repeat=len(pairs)):
        pos = frozenset(p for p, (a, _) in zip(pairs, states) if a)
        neg = frozenset(p for p, (_, b) in zip(pairs, states) if b)
        for mask in range(1 << n):
            loops = frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)
            yield SignedGraph(n, pos, neg, loops)


def random_signed_graph(n: int, rng: random.Random) -> SignedGraph:
    """Uniform over the same state space as :func:`all_signed_graphs`."""
    pos, neg = set(), set()
    for p in itertools.combinations(range(1, n + 1), 2):
        a, b = rng.choice(_PAIR_STATES)
        if a:
            pos.add(p)
        if b:
            neg.add(p)
    loops = {v for v in range(1, n + 1) if rng.random() < 0.5}
    return SignedGraph(n, frozenset(pos), frozenset(neg), frozenset(loops))


def random_sample(n: int, count: int, seed: int = 0) -> list[SignedGraph]:
    rng = random.Random(seed)
    return [random_signed_graph(n, rng) for _ in range(count)]


def standard_corpus(sample_size: int = 200, seed: int = 0) -> list[SignedGraph]:
    """All 512 signed graphs on 3 vertices plus a seeded sample on 4 vertices."""
    return list(all_signed_graphs(3)) + random_sample(4, sample_size, seed)
