"""Catalog of named q-series, each built strictly from its defining formula.

Every entry is constructed from the :mod:`qhook.series` primitives exactly
as its formula reads; algebraically equivalent forms (B22 vs
B22_simplified, the two forms of F) are kept as separate entries so their
equality can be *checked* rather than assumed.

Naming: B21, B22, B32 are the hook-count generating functions
sum_n b_{t,k}(n) q^n for (t,k) = (2,1), (2,2), (3,2); G = B32 - B22 and
F = (1-q^6)*G are the difference series whose coefficient signs are under
study; the remaining entries are the auxiliary polynomials and products
used to bound them.  Pochhammer shorthand in formulas: (a;q)_n is the
product of (1 - a*q^i) for i = 0..n-1, and (a;q)_inf the infinite product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InsufficientTable, UnknownName
from .series import (
    Series,
    add,
    from_terms,
    geometric,
    invert,
    monomial,
    mul,
    one,
    pochhammer_finite,
    pochhammer_infinite,
    scale,
    shift,
    sub,
)

# Explicit polynomials have degree up to 13 (Phi), so smaller truncations
# would silently lose stated terms.
MIN_TRUNC = 13


@dataclass(frozen=True)
class NamedSeries:
    """A catalog series together with the formula it was built from."""

    name: str
    series: Series
    formula: str


def _q_pow(e: int, trunc: int) -> Series:
    return monomial(1, e, trunc)


def _one_minus_q6(trunc: int) -> Series:
    return from_terms({0: 1, 6: -1}, trunc)


def _b21(n: int) -> Series:
    inner = sub(shift(geometric(1, n), 1), shift(geometric(2, n), 2))
    return mul(invert(pochhammer_infinite(1, +1, 2, n)), inner)


def _b22(n: int) -> Series:
    inner = add(
        monomial(1, 2, n),
        add(shift(geometric(2, n), 3), shift(geometric(4, n), 6)),
    )
    return mul(invert(pochhammer_infinite(1, +1, 2, n)), inner)


def _b22_simplified(n: int) -> Series:
    numerator = from_terms({2: 1, 3: 2, 4: 1, 5: 1, 6: 1}, n)
    return mul(pochhammer_infinite(3, -1, 1, n), mul(numerator, geometric(2, n)))


def _b32(n: int) -> Series:
    prefactor = mul(
        pochhammer_infinite(3, +1, 3, n), invert(pochhammer_infinite(1, +1, 1, n))
    )
    return mul(prefactor, _series_for("C", n))


def _c(n: int) -> Series:
    return sub(
        add(shift(geometric(1, n), 2), shift(geometric(2, n), 2)),
        scale(shift(geometric(3, n), 3), 2),
    )


def _r(n: int) -> Series:
    return mul(from_terms({2: 1, 3: 2, 4: 1, 5: 1, 6: 1}, n), geometric(2, n))


def _p(n: int) -> Series:
    acc = one(n)
    for m in range(1, n + 1):
        acc = mul(acc, from_terms({0: 1, m: 1, 2 * m: 1}, n))
    return acc


def _m(n: int) -> Series:
    return mul(from_terms({0: 1, 1: 1, 2: 1}, n), from_terms({0: 1, 2: 1, 4: 1}, n))


def _phi(n: int) -> Series:
    mpc = mul(_series_for("M", n), _series_for("PC", n))
    return sub(sub(mpc, _series_for("PR", n)), _q_pow(3, n))


_FORMULAS = {
    "B21": "(q/(1-q) - q^2/(1-q^2)) / (q;q^2)_inf",
    "B22": "(q^2 + q^3/(1-q^2) + q^6/(1-q^4)) / (q;q^2)_inf",
    "B22_simplified": "(-q^3;q)_inf * (q^2+2q^3+q^4+q^5+q^6)/(1-q^2)",
    "B32": "((q^3;q^3)_inf/(q;q)_inf) * (q^2/(1-q) + q^2/(1-q^2) - 2q^3/(1-q^3))",
    "C": "q^2/(1-q) + q^2/(1-q^2) - 2q^3/(1-q^3)",
    "R": "(q^2+2q^3+q^4+q^5+q^6)/(1-q^2)",
    "P": "prod_{m>=1} (1 + q^m + q^(2m))",
    "PC": "(1-q^6) * C",
    "PR": "(1-q^6) * R",
    "M": "(1+q+q^2)(1+q^2+q^4)",
    "Phi": "M*PC - PR - q^3",
    "S": "P - M*(-q^3;q)_inf",
    "F": "(1-q^6) * G",
    "G": "B32 - B22",
    "E": "q^2 - q^3 + 3q^4 + q^6",
    "H": "(-q^3;q)_inf",
    "euler_lhs": "(-q;q)_inf",
    "euler_rhs": "1/(q;q^2)_inf",
    "sylvester_lhs": "(-q;q)_inf",
    "sylvester_rhs": "sum_{n>=0} ((-q;q)_n/(q;q)_n) (1+q^(2n+1)) q^(n(3n+1)/2)",
    "syl3_lhs": "(1-q) * (-q^3;q)_inf",
    "syl3_rhs": (
        "1 - q + q^3 + sum_{n>=2} ((-q^3;q)_(n-2)/(q^2;q)_(n-1)) "
        "(1+q^(2n+1)) q^((3n^2+n)/2)"
    ),
    "lem1_lhs": "(1-q) * (-q^3;q)_inf",
}

_BUILDERS = {
    "B21": _b21,
    "B22": _b22,
    "B22_simplified": _b22_simplified,
    "B32": _b32,
    "C": _c,
    "R": _r,
    "P": _p,
    "PC": lambda n: mul(_one_minus_q6(n), _series_for("C", n)),
    "PR": lambda n: mul(_one_minus_q6(n), _series_for("R", n)),
    "M": _m,
    "Phi": _phi,
    "S": lambda n: sub(
        _series_for("P", n), mul(_series_for("M", n), _series_for("H", n))
    ),
    "F": lambda n: mul(_one_minus_q6(n), _series_for("G", n)),
    "G": lambda n: sub(_series_for("B32", n), _series_for("B22", n)),
    "E": lambda n: from_terms({2: 1, 3: -1, 4: 3, 6: 1}, n),
    "H": lambda n: pochhammer_infinite(3, -1, 1, n),
    "euler_lhs": lambda n: pochhammer_infinite(1, -1, 1, n),
    "euler_rhs": lambda n: invert(pochhammer_infinite(1, +1, 2, n)),
    "sylvester_lhs": lambda n: pochhammer_infinite(1, -1, 1, n),
    "sylvester_rhs": lambda n: sylvester_rhs(0, n),
    "syl3_lhs": lambda n: mul(from_terms({0: 1, 1: -1}, n), _series_for("H", n)),
    "syl3_rhs": lambda n: syl3_rhs(n),
    "lem1_lhs": lambda n: mul(from_terms({0: 1, 1: -1}, n), _series_for("H", n)),
}

CATALOG = tuple(sorted(_BUILDERS))


@lru_cache(maxsize=None)
def _series_for(name: str, trunc: int) -> Series:
    return _BUILDERS[name](trunc)


def build(name: str, trunc: int) -> NamedSeries:
    """Build a catalog series from its defining formula, exactly.

    ``trunc`` must be at least MIN_TRUNC so every explicit polynomial in
    the catalog is representable in full.
    """
    if name not in _BUILDERS:
        raise UnknownName(
            f"unknown series {name!r}; known names: {', '.join(CATALOG)}"
        )
    if trunc < MIN_TRUNC:
        raise ValueError(
            f"trunc must be >= {MIN_TRUNC} so explicit polynomials fit, got {trunc}"
        )
    return NamedSeries(name, _series_for(name, trunc), _FORMULAS[name])


def _add_shifted(out: list[int], term: Series, base: int) -> None:
    for e, c in enumerate(term.coeffs):
        if c:
            out[base + e] += c


@lru_cache(maxsize=None)
def sylvester_rhs(x_exp: int, trunc: int) -> Series:
    """Series sum form of (-xq;q)_inf with x specialized to q^x_exp.

    Expands sum_{n>=0} ((-xq;q)_n/(q;q)_n) (1 + x q^(2n+1)) x^n q^(n(3n+1)/2).
    Each summand's minimal exponent is n*x_exp + n(3n+1)/2, so summation
    stops only once that exceeds trunc: no contributing term is omitted.
    """
    if x_exp < 0:
        raise ValueError("x exponent must be nonnegative")
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    out = [0] * (trunc + 1)
    n = 0
    while True:
        base = n * x_exp + n * (3 * n + 1) // 2
        if base > trunc:
            break
        # Build the summand only up to the order it can still contribute.
        tr = trunc - base
        numerator = pochhammer_finite(x_exp + 1, -1, n, tr)
        # (q;q)_n has constant term 1, so inversion is legal.
        ratio = mul(numerator, invert(pochhammer_finite(1, +1, n, tr)))
        term = mul(ratio, from_terms({0: 1, x_exp + 2 * n + 1: 1}, tr))
        _add_shifted(out, term, base)
        n += 1
    return Series(tuple(out), trunc)


@lru_cache(maxsize=None)
def syl3_rhs(trunc: int) -> Series:
    """Tail-positive sum form of (1-q)(-q^3;q)_inf.

    Expands 1 - q + q^3 + sum_{n>=2} ((-q^3;q)_(n-2)/(q^2;q)_(n-1))
    (1 + q^(2n+1)) q^((3n^2+n)/2).  Apart from the three head terms, every
    summand has nonnegative coefficients.
    """
    if trunc < 3:
        raise ValueError("trunc must be >= 3 so the head 1 - q + q^3 fits")
    out = [0] * (trunc + 1)
    out[0], out[1], out[3] = 1, -1, 1
    n = 2
    while True:
        base = (3 * n * n + n) // 2
        if base > trunc:
            break
        tr = trunc - base
        numerator = pochhammer_finite(3, -1, n - 2, tr)
        ratio = mul(numerator, invert(pochhammer_finite(2, +1, n - 1, tr)))
        term = mul(ratio, from_terms({0: 1, 2 * n + 1: 1}, tr))
        _add_shifted(out, term, base)
        n += 1
    return Series(tuple(out), trunc)


@lru_cache(maxsize=None)
def sylvester_rearranged_lhs(trunc: int) -> Series:
    """q^2 (1-q) / ((1-q^2)^2 (q^3;q^2)_inf)."""
    numerator = from_terms({2: 1, 3: -1}, trunc)
    sq = from_terms({0: 1, 2: -1}, trunc)
    denominator = mul(mul(sq, sq), pochhammer_infinite(3, +1, 2, trunc))
    return mul(numerator, invert(denominator))


@lru_cache(maxsize=None)
def sylvester_rearranged_rhs(trunc: int) -> Series:
    """Four-term rearrangement of the x=1 Sylvester expansion.

    -q^3 - q^5 + q^2(1+q^2)/(1-q^2)
    + (q^2/(1-q^2)) sum_{n>=2} ((-q^2;q)_(n-1)/(q^2;q)_(n-1))
      (1+q^(2n+1)) q^((3n^2+n)/2).
    """
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    head = add(
        from_terms({3: -1, 5: -1}, trunc),
        mul(from_terms({2: 1, 4: 1}, trunc), geometric(2, trunc)),
    )
    out = [0] * (trunc + 1)
    n = 2
    while True:
        base = 2 + (3 * n * n + n) // 2  # q^2 prefactor folded in
        if base > trunc:
            break
        tr = trunc - base
        numerator = pochhammer_finite(2, -1, n - 1, tr)
        ratio = mul(numerator, invert(pochhammer_finite(2, +1, n - 1, tr)))
        term = mul(ratio, from_terms({0: 1, 2 * n + 1: 1}, tr))
        _add_shifted(out, term, base)
        n += 1
    tail = mul(geometric(2, trunc), Series(tuple(out), trunc))
    return add(head, tail)


def d3_series(n_max: int) -> tuple[int, ...]:
    """Counts of distinct-parts->=3 partitions, read off (-q^3;q)_inf."""
    return pochhammer_infinite(3, -1, 1, n_max).coeffs


def corollary_rhs(n: int, d3: tuple[int, ...]) -> int:
    """Closed form sum_{i=0..n-5} d3(i) - d3(n-1), defined for n > 4."""
    if n <= 4:
        raise ValueError(f"closed form is defined for n > 4, got {n}")
    if len(d3) < n:
        raise InsufficientTable(
            f"need d3(0..{n - 1}) but table has {len(d3)} entries"
        )
    return sum(d3[: n - 4]) - d3[n - 1]


def cumulative_c(d3: tuple[int, ...], n: int) -> int:
    """Prefix sum c(n) = sum_{i=0..n} d3(i)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(d3) < n + 1:
        raise InsufficientTable(f"need d3(0..{n}) but table has {len(d3)} entries")
    return sum(d3[: n + 1])
