"""The ring of signed-symmetric functions in power-sum coordinates.

An :class:`SSymFunction` is a finite table ``{PartitionType: int}``; the key
``(u, [(a1, b1), ..., (ar, br)])`` stands for the product
``x_0^u * p(a1;b1) * ... * p(ar;br)`` where ``p(a;b) = sum_i x_i^a x_{-i}^b``.
The power sums together with ``x_0`` are algebraically independent over Q,
so multiplication is convolution of keys.

Finite-variable images (:class:`TruncatedPolynomial`) set ``x_i = 0`` for
``|i| > N`` and are used for monomial expansion and for the oracles.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import CapExceeded, VerificationError
from .partitions import (
    PartitionType,
    canonicalize,
    concat,
    dominates,
    parse_partition_type,
    partition_types_of_degree,
)

__all__ = [
    "SSymFunction",
    "SymFunction",
    "TruncatedPolynomial",
    "add",
    "scale",
    "mul",
    "omega",
    "iota",
    "pi",
    "truncate",
    "monomial_type",
    "monomial_expansion",
    "specialize",
    "triangularity_report",
    "TriangularityReport",
    "serialize",
    "parse_ssym",
]

ONE_KEY = PartitionType(0, ())


class SSymFunction:
    """Element of SSym in the power-sum basis with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[PartitionType, int] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c = {}
        for k, v in items:
            if v:
                c[k] = c.get(k, 0) + v
                if not c[k]:
                    del c[k]
        self._c = c

    # constructors
    @classmethod
    def zero(cls) -> SSymFunction:
        return cls()

    @classmethod
    def one(cls) -> SSymFunction:
        return cls({ONE_KEY: 1})

    @classmethod
    def x0(cls) -> SSymFunction:
        return cls({PartitionType(1, ()): 1})

    @classmethod
    def p(cls, a: int, b: int = 0) -> SSymFunction:
        """The generator ``p(a;b)``."""
        return cls({canonicalize(0, [(a, b)]): 1})

    @classmethod
    def basis(cls, key: PartitionType) -> SSymFunction:
        return cls({key: 1})

    @property
    def coeffs(self) -> dict[PartitionType, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def keys(self):
        return self._c.keys()

    def __getitem__(self, key):
        return self._c.get(key, 0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, SSymFunction):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({ONE_KEY: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        return add(self, scale(-1, _coerce(other)))

    def __rsub__(self, other):
        return add(_coerce(other), scale(-1, self))

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SSymFunction.one()
        for _ in range(k):
            out = mul(out, self)
        return out

    def degree(self) -> int:
        return max((k.degree for k in self._c), default=0)

    def __repr__(self):
        if not self._c:
            return "SSymFunction(0)"
        return "SSymFunction(" + ", ".join(f"{v}*p{k}" for k, v in sorted(self._c.items())) + ")"


def _coerce(x) -> SSymFunction:
    if isinstance(x, SSymFunction):
        return x
    if isinstance(x, int):
        return SSymFunction({ONE_KEY: x})
    raise TypeError(f"cannot use {type(x).__name__} as a signed-symmetric function")


def add(f: SSymFunction, g: SSymFunction) -> SSymFunction:
    c = dict(f._c)
    for k, v in g._c.items():
        s = c.get(k, 0) + v
        if s:
            c[k] = s
        else:
            c.pop(k, None)
    out = SSymFunction()
    out._c = c
    return out


def scale(c: int, f: SSymFunction) -> SSymFunction:
    if not c:
        return SSymFunction()
    out = SSymFunction()
    out._c = {k: c * v for k, v in f._c.items()}
    return out


def mul(f: SSymFunction, g: SSymFunction) -> SSymFunction:
    acc = defaultdict(int)
    for kf, vf in f._c.items():
        for kg, vg in g._c.items():
            acc[concat(kf, kg)] += vf * vg
    return SSymFunction(acc)


def _omega_sign(key: PartitionType) -> int:
    return -1 if (key.degree - len(key.columns)) % 2 else 1


def omega(f: SSymFunction) -> SSymFunction:
    """The involution with ``x_0 -> -x_0`` and ``p(a;b) -> (-1)^(a+b-1) p(a;b)``."""
    out = SSymFunction()
    out._c = {k: _omega_sign(k) * v for k, v in f._c.items()}
    return out


# -- ordinary symmetric functions --------------------------------------------


class SymFunction:
    """Ordinary symmetric function in the power-sum basis (rational coefficients).

    Keys are integer partitions as weakly decreasing tuples; ``()`` is 1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple, Fraction | int] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c = {}
        for k, v in items:
            k = tuple(sorted((int(x) for x in k), reverse=True))
            if any(x <= 0 for x in k):
                raise ValueError(f"partition parts must be positive: {k}")
            c[k] = c.get(k, 0) + v
            if not c[k]:
                del c[k]
        self._c = c

    @classmethod
    def p(cls, *parts: int) -> SymFunction:
        return cls({tuple(parts): 1})

    @property
    def coeffs(self):
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __eq__(self, other):
        if isinstance(other, SymFunction):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        return SymFunction(list(self._c.items()) + list(other._c.items()))

    def __sub__(self, other):
        return SymFunction(list(self._c.items()) + [(k, -v) for k, v in other._c.items()])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunction({k: other * v for k, v in self._c.items()})
        acc = defaultdict(int)
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                acc[tuple(sorted(k1 + k2, reverse=True))] += v1 * v2
        return SymFunction(acc)

    __rmul__ = __mul__

    def omega(self) -> SymFunction:
        """``p_k -> (-1)^(k-1) p_k``."""
        return SymFunction({k: (-1) ** ((sum(k) - len(k)) % 2) * v for k, v in self._c.items()})

    def __repr__(self):
        return "SymFunction(" + ", ".join(f"{v}*p{k}" for k, v in sorted(self._c.items())) + ")"


def iota(f: SymFunction) -> SSymFunction:
    """Embed via ``p_k -> p(k;0)``; coefficients must be integers."""
    out = {}
    for k, v in f.items():
        v = Fraction(v)
        if v.denominator != 1:
            raise ValueError(f"non-integer coefficient {v} at p{k}")
        out[canonicalize(0, [(part, 0) for part in k])] = int(v)
    return SSymFunction(out)


def pi(f: SSymFunction) -> SymFunction:
    """Project to Sym by ``x_i = 0`` for ``i <= 0``: kills x_0 and every p(a;b) with b > 0."""
    out = {}
    for k, v in f.items():
        if k.u or any(b for _, b in k.columns):
            continue
        out[tuple(a for a, _ in k.columns)] = v
    return SymFunction(out)


# -- finite-variable images --------------------------------------------------


@dataclass
class TruncatedPolynomial:
    """Polynomial in ``x_{-N}, ..., x_N``; exponent vectors indexed by ``i + N``."""

    radius: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {e: c for e, c in self.terms.items() if c}

    @property
    def nvars(self) -> int:
        return 2 * self.radius + 1

    @classmethod
    def constant(cls, N: int, c: int = 1) -> TruncatedPolynomial:
        return cls(N, {(0,) * (2 * N + 1): c})

    @classmethod
    def monomial(cls, N: int, colors: Iterable[int], c: int = 1) -> TruncatedPolynomial:
        """``c * prod x_{color}``, colors in ``[-N, N]``."""
        e = [0] * (2 * N + 1)
        for col in colors:
            e[col + N] += 1
        return cls(N, {tuple(e): c})

    def add_monomial(self, colors: Iterable[int], c: int = 1) -> None:
        e = [0] * self.nvars
        for col in colors:
            e[col + self.radius] += 1
        e = tuple(e)
        s = self.terms.get(e, 0) + c
        if s:
            self.terms[e] = s
        else:
            self.terms.pop(e, None)

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return TruncatedPolynomial(self.radius, t)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c: int) -> TruncatedPolynomial:
        return TruncatedPolynomial(self.radius, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        self._check(other)
        acc = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
        return TruncatedPolynomial(self.radius, acc)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.radius == other.radius and self.terms == other.terms

    def coefficient(self, colors: Iterable[int]) -> int:
        e = [0] * self.nvars
        for col in colors:
            e[col + self.radius] += 1
        return self.terms.get(tuple(e), 0)

    def act(self, sigma: Mapping[int, int]) -> TruncatedPolynomial:
        """Apply ``x_i -> x_{sigma(i)}`` for a permutation of ``[-N, N]``."""
        N = self.radius
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, k in enumerate(e):
                if k:
                    f[sigma[i - N] + N] += k
            out[tuple(f)] = c
        return TruncatedPolynomial(N, out)

    def evaluate(self, values: Mapping[int, int]) -> int:
        N = self.radius
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term *= values[i - N] ** k
            total += term
        return total

    def _check(self, other):
        if self.radius != other.radius:
            raise ValueError("radius mismatch")


@lru_cache(maxsize=None)
def _generator_terms(a: int, b: int, N: int) -> tuple:
    terms = defaultdict(int)
    for i in range(-N, N + 1):
        e = [0] * (2 * N + 1)
        e[i + N] += a
        e[-i + N] += b
        terms[tuple(e)] += 1
    return tuple(terms.items())


def _key_image(key: PartitionType, N: int) -> dict:
    e0 = [0] * (2 * N + 1)
    e0[N] = key.u
    current = {tuple(e0): 1}
    for a, b in key.columns:
        nxt = defaultdict(int)
        gen = _generator_terms(a, b, N)
        for e1, c1 in current.items():
            for e2, c2 in gen:
                nxt[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
        current = nxt
    return current


def truncate(f: SSymFunction, N: int) -> TruncatedPolynomial:
    """Image of ``f`` after setting ``x_i = 0`` for ``|i| > N``."""
    if N < 0:
        raise ValueError("radius must be nonnegative")
    acc = defaultdict(int)
    for key, c in f.items():
        for e, v in _key_image(key, N).items():
            acc[e] += c * v
    return TruncatedPolynomial(N, acc)


def monomial_type(exponents: tuple[int, ...], N: int) -> PartitionType:
    """Type of the monomial with the given exponent vector over ``[-N, N]``."""
    cols = []
    for i in range(1, N + 1):
        a, b = exponents[N + i], exponents[N - i]
        if a or b:
            cols.append((a, b))
    return canonicalize(exponents[N], cols)


def _type_size(key: PartitionType, N: int) -> int:
    """Number of distinct monomials of the given type in ``x_{-N..N}``."""
    r = len(key.columns)
    if r > N:
        return 0
    asym = sum(1 for a, b in key.columns if a != b)
    count = math.perm(N, r) * 2**asym
    for m in Counter(key.columns).values():
        count //= math.factorial(m)
    return count


def monomial_expansion(f: SSymFunction) -> dict[PartitionType, int]:
    """Coordinates of ``f`` in the monomial basis ``m_(u, lambda)``.

    Works on the image at radius ``N = deg f``, which is large enough to
    realise every type of degree at most ``N``.
    """
    if not f:
        return {}
    N = max(f.degree(), 1)
    poly = truncate(f, N)
    seen = defaultdict(list)
    for e, c in poly.terms.items():
        seen[monomial_type(e, N)].append(c)
    out = {}
    for key, coeffs in seen.items():
        if len(set(coeffs)) != 1 or len(coeffs) != _type_size(key, N):
            raise VerificationError(f"input is not signed-symmetric at type {key}")
        out[key] = coeffs[0]
    return dict(sorted(out.items()))


def specialize(f: SSymFunction, n: int, zero_free: bool = False) -> int:
    """Evaluate at ``x_i = 1`` for ``i`` in ``[-n, n]`` (minus 0 if zero_free), else 0."""
    x0 = 0 if zero_free else 1
    gen = 2 * n if zero_free else 2 * n + 1
    total = 0
    for key, c in f.items():
        total += c * x0**key.u * gen ** len(key.columns)
    return total


# -- triangularity ----------------------------------------------------------


@dataclass
class TriangularityEntry:
    index: PartitionType
    diagonal: int
    off_diagonal_ok: bool
    nonnegative: bool
    bad_keys: list

    @property
    def passed(self) -> bool:
        return self.diagonal > 0 and self.off_diagonal_ok and self.nonnegative


@dataclass
class TriangularityReport:
    degree_bound: int
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]


TRIANGULARITY_CAP = 6


def triangularity_report(d: int, cap: int = TRIANGULARITY_CAP) -> TriangularityReport:
    """Expand every ``p_(u,lambda)`` of degree ``<= d`` in the monomial basis and check triangularity."""
    if d > cap:
        raise CapExceeded(f"degree bound {d} exceeds cap {cap}")
    entries = []
    for deg in range(1, d + 1):
        for key in partition_types_of_degree(deg):
            exp = monomial_expansion(SSymFunction.basis(key))
            bad = [q for q in exp if not dominates(q, key)]
            entries.append(
                TriangularityEntry(
                    index=key,
                    diagonal=exp.get(key, 0),
                    off_diagonal_ok=not bad,
                    nonnegative=all(v > 0 for v in exp.values()),
                    bad_keys=bad,
                )
            )
    return TriangularityReport(d, entries)


# -- serialization ----------------------------------------------------------


def serialize(f: SSymFunction) -> str:
    """One line ``<coeff> <type>`` per nonzero key, sorted by the total order on types."""
    return "".join(f"{c} {k}\n" for k, c in sorted(f.items()))


def parse_ssym(text: str) -> SSymFunction:
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        coeff, rest = line.split(None, 1)
        out[parse_partition_type(rest)] = int(coeff)
    return SSymFunction(out)
