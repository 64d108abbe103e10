"""Small shared helpers for the tests."""

import itertools
import random

from signed_csf.partitions import partition_types_of_degree
from signed_csf.ssym import SSymFunction, TruncatedPolynomial, monomial_type


def monomial_truncated(key, N):
    """``m_key`` at radius N: every monomial of the given type, coefficient 1."""
    out = TruncatedPolynomial(N, {})
    d = key.degree
    for e in itertools.product(range(d + 1), repeat=2 * N + 1):
        if sum(e) == d and monomial_type(e, N) == key:
            out.terms[e] = 1
    return out


def random_table(rng: random.Random, max_degree=5, max_terms=6) -> SSymFunction:
    """Random integer combination of power sums of degree at most ``max_degree``."""
    pool = [k for d in range(max_degree + 1) for k in partition_types_of_degree(d)]
    return SSymFunction({rng.choice(pool): rng.randint(-9, 9) for _ in range(rng.randint(1, max_terms))})
