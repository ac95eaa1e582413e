"""Exact truncated formal power series over the integers.

A :class:`Series` holds the coefficients of a formal power series in q from
q^0 up to a hard truncation order ``trunc``, inclusive.  Coefficients are
arbitrary-precision Python ints: no rounding and no overflow, ever.  Every
arithmetic result records its own truncation order (the minimum of the
operands' orders) and reading a coefficient beyond that order raises
:class:`~qhook.errors.ExponentBeyondTruncation` instead of returning a
silent zero, so "this coefficient is nonnegative" can never be confused
with "this coefficient was never computed".

Besides ring arithmetic the module provides the constructors needed for
partition generating functions: geometric series 1/(1-q^m) and finite or
infinite q-Pochhammer products with monomial arguments, i.e. products of
factors (1 -+ q^e).

Multiplication is the schoolbook Cauchy product (with zero-coefficient
skipping); it is exact and fast enough for the truncation orders used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import ExponentBeyondTruncation, NonUnitConstantTerm

# Sparse input format: exponent -> coefficient.  No zero coefficients are
# stored once converted; exponents beyond the truncation order are dropped.
TermList = Mapping[int, int]


@dataclass(frozen=True, repr=False)
class Series:
    """Formal power series truncated at order ``trunc`` (inclusive).

    ``coeffs[n]`` is the exact coefficient of q^n; the tuple always has
    length ``trunc + 1``.  Instances are immutable and safe to share.
    """

    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(
                f"trunc={self.trunc} needs {self.trunc + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    def __getitem__(self, n: int) -> int:
        return coeff(self, n)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return sub(self, other)

    def __neg__(self) -> "Series":
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __str__(self) -> str:
        parts: list[str] = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if len(parts) == 12:
                parts.append("...")
                break
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        head = " ".join(parts) if parts else "0"
        return f"{head} + O(q^{self.trunc + 1})"

    def __repr__(self) -> str:
        return f"Series({self})"


def zero(trunc: int) -> Series:
    """The zero series at the given truncation order."""
    return Series((0,) * (trunc + 1), trunc)


def one(trunc: int) -> Series:
    """The constant series 1."""
    return Series((1,) + (0,) * trunc, trunc)


def monomial(c: int, e: int, trunc: int) -> Series:
    """The single term c*q^e (zero series if e exceeds trunc)."""
    return from_terms({e: c}, trunc)


def from_terms(terms: TermList, trunc: int) -> Series:
    """Build a series from a sparse exponent -> coefficient map.

    Exponents beyond ``trunc`` are dropped; negative exponents are rejected.
    """
    out = [0] * (trunc + 1)
    for e, c in terms.items():
        if e < 0:
            raise ValueError(f"negative exponent {e} in term list")
        if c and e <= trunc:
            out[e] += c
    return Series(tuple(out), trunc)


def add(a: Series, b: Series) -> Series:
    n = min(a.trunc, b.trunc)
    return Series(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), n)


def sub(a: Series, b: Series) -> Series:
    n = min(a.trunc, b.trunc)
    return Series(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), n)


def neg(a: Series) -> Series:
    return Series(tuple(-x for x in a.coeffs), a.trunc)


def scale(a: Series, c: int) -> Series:
    """Multiply every coefficient by the exact integer c."""
    return Series(tuple(c * x for x in a.coeffs), a.trunc)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product, truncated at the minimum of the operands' orders."""
    n = min(a.trunc, b.trunc)
    ca, cb = a.coeffs[: n + 1], b.coeffs[: n + 1]
    # outer loop over the operand with fewer nonzero terms in the window
    if sum(1 for x in cb if x) < sum(1 for x in ca if x):
        ca, cb = cb, ca
    out = [0] * (n + 1)
    for i, ai in enumerate(ca):
        if ai:
            for j, bj in enumerate(cb[: n + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return Series(tuple(out), n)


def shift(a: Series, e: int) -> Series:
    """Multiply by q^e: coefficient of q^n becomes that of q^(n-e) in a.

    The truncation order is unchanged; coefficients pushed beyond it are
    dropped.
    """
    if e < 0:
        raise ValueError("shift exponent must be nonnegative")
    if e == 0:
        return a
    return Series((0,) * min(e, a.trunc + 1) + a.coeffs[: a.trunc + 1 - e], a.trunc)


def truncate(a: Series, trunc: int) -> Series:
    """Restrict a series to a lower truncation order."""
    if trunc > a.trunc:
        raise ExponentBeyondTruncation(
            f"cannot extend truncation {a.trunc} to {trunc}"
        )
    return Series(a.coeffs[: trunc + 1], trunc)


def invert(a: Series) -> Series:
    """Reciprocal series: mul(a, invert(a)) == 1 up to a.trunc.

    Over the integers only series with constant term +1 or -1 are units;
    anything else raises :class:`NonUnitConstantTerm`.  Uses the standard
    recurrence b_m = -(1/a_0) * sum_{k=1..m} a_k b_{m-k}.
    """
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(
            f"constant term must be +1 or -1 to invert over the integers, got {c0}"
        )
    n = a.trunc
    ca = a.coeffs
    nonzero = [k for k in range(1, n + 1) if ca[k]]
    out = [0] * (n + 1)
    out[0] = c0  # 1/c0 == c0 for c0 = +-1
    for m in range(1, n + 1):
        s = 0
        for k in nonzero:
            if k > m:
                break
            s += ca[k] * out[m - k]
        out[m] = -c0 * s
    return Series(tuple(out), n)


def geometric(m: int, trunc: int) -> Series:
    """1/(1-q^m): coefficient 1 at every multiple of m."""
    if m < 1:
        raise ValueError("geometric step must be >= 1")
    out = [0] * (trunc + 1)
    for e in range(0, trunc + 1, m):
        out[e] = 1
    return Series(tuple(out), trunc)


def pochhammer_finite(base_exp: int, sign: int, n: int, trunc: int) -> Series:
    """Product of (1 - sign*q^(base_exp+i)) for i = 0..n-1.

    sign=+1 gives factors (1 - q^e); sign=-1 gives (1 + q^e).  n=0 is the
    empty product 1.  Factors whose exponent exceeds trunc are 1 modulo
    q^(trunc+1) and contribute nothing.
    """
    if base_exp < 0:
        raise ValueError("base exponent must be nonnegative")
    if n < 0:
        raise ValueError("factor count must be nonnegative")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    acc = one(trunc)
    for i in range(n):
        e = base_exp + i
        if e > trunc:
            break
        acc = mul(acc, from_terms({0: 1, e: -sign}, trunc))
    return acc


def pochhammer_infinite(base_exp: int, sign: int, step: int, trunc: int) -> Series:
    """Product of (1 - sign*q^(base_exp + j*step)) over all j >= 0.

    Only factors with exponent <= trunc are multiplied; the rest are 1
    modulo q^(trunc+1), so the result is the exact truncation of the
    infinite product.
    """
    if base_exp < 1:
        raise ValueError("base exponent must be >= 1 for an infinite product")
    if step < 1:
        raise ValueError("step must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    acc = one(trunc)
    e = base_exp
    while e <= trunc:
        acc = mul(acc, from_terms({0: 1, e: -sign}, trunc))
        e += step
    return acc


def coeff(a: Series, n: int) -> int:
    """Coefficient of q^n.  Reading beyond the truncation order is an error."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if n > a.trunc:
        raise ExponentBeyondTruncation(
            f"coefficient of q^{n} requested but series is truncated at q^{a.trunc}"
        )
    return a.coeffs[n]
