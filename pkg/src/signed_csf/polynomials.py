"""Exact univariate interpolation over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _poly_mul_linear(poly: list, root) -> list:
    """Multiply ``poly`` (ascending) by ``(t - root)``."""
    out = [Fraction(0)] * (len(poly) + 1)
    for k, c in enumerate(poly):
        out[k + 1] += c
        out[k] -= root * c
    return out


def lagrange_interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (ascending) of the unique polynomial of degree < len(xs) through the points."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    result = [Fraction(0)] * max(n, 1)
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j != i:
                basis = _poly_mul_linear(basis, xs[j])
                denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            result[k] += scale * c
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def to_integer_coefficients(coeffs: Sequence[Fraction]) -> list[int] | None:
    if any(Fraction(c).denominator != 1 for c in coeffs):
        return None
    return [int(c) for c in coeffs]
