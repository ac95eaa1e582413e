"""Brute-force partition oracle.

Everything here is computed by direct enumeration of partitions, with no
generating functions involved, so it can serve as independent ground truth
for the series-built quantities.

A partition is a plain tuple of positive ints in nonincreasing order.
Enumeration streams partitions in decreasing lexicographic order by largest
part, so runs are deterministic and failures reproducible.

Full enumeration is intended for n up to roughly 45; beyond that the
partition counts grow quickly and each call costs accordingly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .errors import InvalidDomain


@dataclass(frozen=True)
class Unrestricted:
    """No constraint: all partitions."""


@dataclass(frozen=True)
class TRegular:
    """No part divisible by t (t=2 means all parts odd)."""

    t: int

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ValueError("regularity modulus must be >= 2")


@dataclass(frozen=True)
class DistinctMin:
    """Distinct parts, all of size >= m."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("minimum part must be >= 1")


Constraint = Union[Unrestricted, TRegular, DistinctMin]
UNRESTRICTED = Unrestricted()


def _descend_any(n: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield tuple(acc)
        return
    for part in range(min(n, cap), 0, -1):
        acc.append(part)
        yield from _descend_any(n - part, part, acc)
        acc.pop()


def _descend_tregular(n: int, cap: int, t: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield tuple(acc)
        return
    for part in range(min(n, cap), 0, -1):
        if part % t:
            acc.append(part)
            yield from _descend_tregular(n - part, part, t, acc)
            acc.pop()


def _descend_distinct(n: int, cap: int, lo: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield tuple(acc)
        return
    for part in range(min(n, cap), lo - 1, -1):
        acc.append(part)
        yield from _descend_distinct(n - part, part - 1, lo, acc)
        acc.pop()


def enumerate_partitions(
    n: int, constraint: Constraint = UNRESTRICTED
) -> Iterator[tuple[int, ...]]:
    """Yield each qualifying partition of n exactly once.

    n = 0 yields exactly the empty partition under every constraint.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if isinstance(constraint, Unrestricted):
        yield from _descend_any(n, n, [])
    elif isinstance(constraint, TRegular):
        yield from _descend_tregular(n, n, constraint.t, [])
    elif isinstance(constraint, DistinctMin):
        yield from _descend_distinct(n, n, constraint.m, [])
    else:
        raise TypeError(f"unknown constraint {constraint!r}")


def conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram: column lengths become row lengths."""
    if not p:
        return ()
    conj = [0] * p[0]
    for part in p:
        for j in range(part):
            conj[j] += 1
    return tuple(conj)


def hook_lengths(p: tuple[int, ...]) -> Counter:
    """Multiset of hook lengths of the Young diagram of p.

    The hook of the cell in row i, column j (0-based) counts the cells to
    its right, the cells below it, and the cell itself:
    p[i] - j + conjugate(p)[j] - i - 1.  The multiset has exactly sum(p)
    members, one per cell.
    """
    conj = conjugate(p)
    return Counter(
        p_i - j + conj[j] - i - 1 for i, p_i in enumerate(p) for j in range(p_i)
    )


@lru_cache(maxsize=None)
def _hook_profile(t: int, n: int) -> Counter:
    """Aggregate hook-length multiset over all t-regular partitions of n."""
    profile: Counter = Counter()
    for p in enumerate_partitions(n, TRegular(t)):
        conj = conjugate(p)
        profile.update(
            p_i - j + conj[j] - i - 1 for i, p_i in enumerate(p) for j in range(p_i)
        )
    return profile


def count_hooks_brute(t: int, k: int, n: int) -> int:
    """Total number of hooks of length k among all t-regular partitions of n.

    The empty partition has no boxes, so every count at n = 0 is 0.
    """
    if t < 2:
        raise ValueError("regularity modulus must be >= 2")
    if k < 1:
        raise ValueError("hook length must be >= 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _hook_profile(t, n)[k]


@dataclass(frozen=True)
class HookCountTable:
    """Brute-force hook counts for one (t, k) over n = 0..len(values)-1."""

    t: int
    k: int
    values: tuple[int, ...]


def hook_count_table(t: int, k: int, n_max: int) -> HookCountTable:
    """Tabulate count_hooks_brute(t, k, n) for n = 0..n_max."""
    return HookCountTable(
        t, k, tuple(count_hooks_brute(t, k, n) for n in range(n_max + 1))
    )


@lru_cache(maxsize=None)
def d3_brute(n: int) -> int:
    """Number of partitions of n into distinct parts all >= 3; d3(0) = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for _ in enumerate_partitions(n, DistinctMin(3)))


def injection(p: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Map a distinct-parts->=3 partition of n-1 into a smaller index class.

    The single-part partition (n-1) goes to (0, empty); any other partition
    loses its largest part and lands at index n-1-p[0].  Returns the pair
    (target_index, image) so that injectivity can be checked on pairs.
    """
    if not p:
        raise InvalidDomain("empty partition is not in the domain")
    if any(p[i] <= p[i + 1] for i in range(len(p) - 1)):
        raise InvalidDomain(f"parts must be strictly decreasing, got {p}")
    if p[-1] < 3:
        raise InvalidDomain(f"all parts must be >= 3, got {p}")
    total = sum(p)
    if total < 4:
        raise InvalidDomain(f"partitioned integer must be >= 4, got {total}")
    if len(p) == 1:
        return (0, ())
    return (total - p[0], p[1:])
