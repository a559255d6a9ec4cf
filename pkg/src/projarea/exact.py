"""Exact scalar kernel: rationals, surd comparisons and matrix inertia.

The only scalar type on the exact path is :class:`fractions.Fraction`, which
already keeps values in lowest terms with a positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC
from typing import Iterable, NamedTuple, Sequence

from .errors import NegativeInput, NotSymmetric, ParseError

Rational = Fraction

LESS, EQUAL, GREATER = -1, 0, 1


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions, exact strings ("3/4", "-2") or floats (exactly)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {x!r}") from exc
    raise ParseError(f"cannot interpret {x!r} as a rational number")


def format_rational(q: Fraction) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign(q) -> int:
    return (q > 0) - (q < 0)


def cmp_sqrt_sum(a, b, c) -> int:
    """Compare ``sqrt(a) + sqrt(b)`` against ``sqrt(c)`` exactly.

    Returns ``LESS``, ``EQUAL`` or ``GREATER`` (-1, 0, 1).
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if a < 0 or b < 0 or c < 0:
        raise NegativeInput(f"square roots of negative numbers: {a}, {b}, {c}")
    # Squaring both sides: a + b + 2 sqrt(ab) vs c.
    d = c - a - b
    if d <= 0:
        if d == 0 and a * b == 0:
            return EQUAL
        return GREATER
    # 2 sqrt(ab) vs d with d > 0
    return sign(4 * a * b - d * d)


def is_rational_square(q) -> Fraction | None:
    """Return the nonnegative rational square root of ``q`` if there is one."""
    q = as_rational(q)
    if q < 0:
        raise NegativeInput(f"negative argument {q}")
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def dyadic_sqrt(q, bits: int) -> Fraction:
    """``floor(sqrt(q) * 2**bits) / 2**bits`` computed with integer arithmetic."""
    q = as_rational(q)
    if q < 0:
        raise NegativeInput(f"negative argument {q}")
    scaled = (q.numerator << (2 * bits)) // q.denominator
    return Fraction(isqrt(scaled), 1 << bits)


@dataclass(frozen=True)
class SymMatrix:
    """Square rational matrix, checked to be exactly symmetric."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise NotSymmetric("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise NotSymmetric(f"entry ({i},{j}) differs from ({j},{i})")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def congruent(self, s: Sequence[Sequence]) -> "SymMatrix":
        """Return ``S^T M S``."""
        s = [[as_rational(x) for x in row] for row in s]
        n = self.n
        ms = [[sum(self.entries[i][k] * s[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        return SymMatrix([[sum(s[k][i] * ms[k][j] for k in range(n)) for j in range(n)]
                          for i in range(n)])


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int


def _as_sym(m) -> SymMatrix:
    return m if isinstance(m, SymMatrix) else SymMatrix(m)


def inertia(m) -> Inertia:
    """Signature of a symmetric rational matrix by exact congruence reduction.

    Pivots on the largest-magnitude nonzero diagonal entry; when the whole
    diagonal vanishes but some off-diagonal entry does not, the 2x2 block
    ``[[0, m], [m, 0]]`` is split off and contributes one of each sign.
    """
    m = _as_sym(m)
    a = [list(row) for row in m.entries]
    plus = minus = 0
    while a:
        n = len(a)
        piv = max(range(n), key=lambda i: abs(a[i][i]))
        if a[piv][piv] != 0:
            d = a[piv][piv]
            if d > 0:
                plus += 1
            else:
                minus += 1
            rest = [i for i in range(n) if i != piv]
            a = [[a[i][j] - a[i][piv] * a[piv][j] / d for j in rest] for i in rest]
            continue
        off = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if off is None:
            break
        i, j = off
        h = a[i][j]
        plus += 1
        minus += 1
        rest = [k for k in range(n) if k not in (i, j)]
        # Schur complement of [[0, h], [h, 0]], whose inverse is [[0, 1/h], [1/h, 0]].
        a = [[a[r][c] - (a[r][i] * a[j][c] + a[r][j] * a[i][c]) / h for c in rest]
             for r in rest]
    return Inertia(plus, minus, m.n - plus - minus)


def is_lorentzian(m) -> bool:
    """Nonnegative entries and at most one positive eigenvalue."""
    m = _as_sym(m)
    if any(x < 0 for row in m.entries for x in row):
        return False
    return inertia(m).n_plus <= 1


def det(m) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [list(row) for row in (m.entries if isinstance(m, SymMatrix) else m)]
    a = [[as_rational(x) for x in row] for row in a]
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result
