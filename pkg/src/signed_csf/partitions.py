"""Partition types ``(u, lambda)`` indexing the monomial and power-sum bases.

A partition type is a nonnegative integer ``u`` (the power of ``x_0``)
together with a 2 x r array of nonnegative integers, considered up to
permuting columns and swapping the two entries of any column.  Every column
must contain a positive entry.

The canonical representative stores each column as ``(a, b)`` with
``a >= b`` and sorts the columns in non-increasing lexicographic order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator

Column = tuple[int, int]

__all__ = [
    "PartitionType",
    "canonicalize",
    "concat",
    "compare",
    "parse_partition_type",
]


@total_ordering
@dataclass(frozen=True)
class PartitionType:
    """Canonical partition type; construct through :func:`canonicalize`."""

    u: int
    columns: tuple[Column, ...] = ()

    @property
    def degree(self) -> int:
        return self.u + sum(a + b for a, b in self.columns)

    @property
    def length(self) -> int:
        """Number of columns ``r``."""
        return len(self.columns)

    def sort_key(self):
        return (self.degree, self.u, self.columns)

    def __lt__(self, other):
        if not isinstance(other, PartitionType):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        cols = " ".join(f"{a}/{b}" for a, b in self.columns)
        return f"({self.u}; {cols})" if cols else f"({self.u};)"

    def __repr__(self):
        return f"PartitionType{str(self)}"


def _check_column(col) -> Column:
    a, b = col
    a, b = int(a), int(b)
    if a < 0 or b < 0:
        raise ValueError(f"negative entry in column {(a, b)}")
    if a == 0 and b == 0:
        raise ValueError("zero column (0, 0) is not allowed")
    return (a, b) if a >= b else (b, a)


def canonicalize(u: int, raw_columns: Iterable[Column] = ()) -> PartitionType:
    """Return the canonical representative of ``(u, raw_columns)``.

    >>> canonicalize(0, [(1, 2)])
    PartitionType(0; 2/1)
    >>> canonicalize(0, [(1, 1), (1, 0), (0, 2)])
    PartitionType(0; 2/0 1/1 1/0)
    """
    u = int(u)
    if u < 0:
        raise ValueError(f"u must be nonnegative, got {u}")
    cols = sorted((_check_column(c) for c in raw_columns), reverse=True)
    return PartitionType(u, tuple(cols))


def concat(p: PartitionType, q: PartitionType) -> PartitionType:
    """Index of the product ``p_p * p_q``: add the u-parts, merge the columns."""
    if not q.columns:
        return PartitionType(p.u + q.u, p.columns)
    if not p.columns:
        return PartitionType(p.u + q.u, q.columns)
    return PartitionType(p.u + q.u, tuple(sorted(p.columns + q.columns, reverse=True)))


def compare(p: PartitionType, q: PartitionType) -> int:
    """Three-way comparison: by degree, then ``u``, then the column lists."""
    kp, kq = p.sort_key(), q.sort_key()
    return (kp > kq) - (kp < kq)


_RENDER_RE = re.compile(r"^\(\s*(\d+)\s*;\s*((?:\d+/\d+\s*)*)\)$")


def parse_partition_type(text: str) -> PartitionType:
    """Inverse of ``str(PartitionType)``."""
    m = _RENDER_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a partition type rendering: {text!r}")
    cols = [tuple(int(x) for x in tok.split("/")) for tok in m.group(2).split()]
    return canonicalize(int(m.group(1)), cols)


# -- helpers for enumeration and the covering order used by triangularity ----


def _column_multisets(total: int) -> Iterator[tuple[Column, ...]]:
    """Canonical column tuples whose entries sum to ``total``."""
    if total == 0:
        yield ()
        return
    # columns in non-increasing lex order; each column (a, b), a >= b, a+b >= 1
    cols = [(s - b, b) for s in range(1, total + 1) for b in range(0, s // 2 + 1)]
    cols.sort(reverse=True)

    def rec(remaining, start):
        if remaining == 0:
            yield ()
            return
        for idx in range(start, len(cols)):
            a, b = cols[idx]
            if a + b <= remaining:
                for rest in rec(remaining - a - b, idx):
                    yield ((a, b),) + rest

    yield from rec(total, 0)


def partition_types_of_degree(d: int) -> list[PartitionType]:
    """All canonical partition types of degree exactly ``d``, sorted."""
    out = []
    for u in range(d + 1):
        for cols in _column_multisets(d - u):
            out.append(PartitionType(u, cols))
    return sorted(out)


def merges(columns: tuple[Column, ...]) -> set[tuple[Column, ...]]:
    """Column tuples obtained by summing two columns of some representative."""
    out = set()
    for i, j in combinations(range(len(columns)), 2):
        rest = columns[:i] + columns[i + 1 : j] + columns[j + 1 :]
        (a, b), (c, d) = columns[i], columns[j]
        for merged in ((a + c, b + d), (a + d, b + c)):
            out.add(canonicalize(0, rest + (merged,)).columns)
    return out


def dominates(q: PartitionType, p: PartitionType) -> bool:
    """Whether ``q >= p`` in the partial order generated by column merges and u-increase."""
    if q == p or q.u > p.u:
        return True
    if q.u < p.u:
        return False
    # same u: q.columns must be reachable from p.columns by merging
    target = q.columns
    frontier = {p.columns}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for cols in frontier:
            if len(cols) <= len(target):
                continue
            for m in merges(cols):
                if m == target:
                    return True
                if m not in seen:
                    seen.add(m)
                    nxt.add(m)
        frontier = nxt
    return False
