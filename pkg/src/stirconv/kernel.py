"""Exact special-number families: Stirling, Lah, binomial, Bell, Laguerre.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
nothing in this module touches floating point.

The four triangles (signed and unsigned Stirling numbers of the first kind,
Stirling numbers of the second kind, Lah numbers) live in lazily grown
:class:`TriangleCache` objects shared by the whole process.  Rows are built
on demand and kept forever.
"""

from __future__ import annotations

import enum
import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "TriangleKind",
    "TriangleCache",
    "Polynomial",
    "triangle",
    "override_triangle",
    "stirling2",
    "stirling1_signed",
    "stirling1_unsigned",
    "lah",
    "binom_int",
    "binom_gen",
    "bell",
    "exp_poly",
    "exp_poly_eval",
    "laguerre",
    "factorial",
]


def _check_nonneg(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def factorial(n: int) -> int:
    _check_nonneg(n=n)
    return math.factorial(n)


class TriangleKind(enum.Enum):
    STIRLING_SIGNED = "stirling1"
    STIRLING_UNSIGNED = "stirling1u"
    STIRLING2 = "stirling2"
    LAH = "lah"


def _next_row(kind: TriangleKind, prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Row ``n`` built from row ``n - 1``."""
    m = n - 1
    out = [0] * (n + 1)
    if kind is TriangleKind.STIRLING2:
        # S(n, k) = k S(n-1, k) + S(n-1, k-1)
        for k in range(1, n + 1):
            out[k] = (k * prev[k] if k <= m else 0) + prev[k - 1]
    elif kind is TriangleKind.STIRLING_SIGNED:
        # s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
        for k in range(1, n + 1):
            out[k] = prev[k - 1] - (m * prev[k] if k <= m else 0)
    elif kind is TriangleKind.STIRLING_UNSIGNED:
        for k in range(1, n + 1):
            out[k] = prev[k - 1] + (m * prev[k] if k <= m else 0)
    else:
        # closed form L(n, k) = n!/k! * C(n-1, k-1); no recurrence needed
        for k in range(1, n + 1):
            out[k] = math.factorial(n) // math.factorial(k) * math.comb(n - 1, k - 1)
    return tuple(out)


class TriangleCache:
    """Lower-triangular table of one number family, grown a row at a time.

    Row ``n`` holds the entries ``k = 0..n``.  Lookups with ``k > n`` return 0.
    A cache built with explicit ``rows`` is frozen: it never grows, and asking
    for a row beyond the supplied ones raises ``IndexError``.
    """

    def __init__(self, kind: TriangleKind, rows: Sequence[Sequence[int]] | None = None):
        self.kind = kind
        self._lock = threading.Lock()
        if rows is None:
            self._rows: list[tuple[int, ...]] = [(1,)]
            self.frozen = False
        else:
            self._rows = [tuple(int(v) for v in r) for r in rows]
            for n, r in enumerate(self._rows):
                if len(r) != n + 1:
                    raise ValueError(f"row {n} has {len(r)} entries, expected {n + 1}")
            self.frozen = True

    def __len__(self) -> int:
        return len(self._rows)

    def _grow(self, n: int) -> None:
        with self._lock:
            while len(self._rows) <= n:
                self._rows.append(_next_row(self.kind, self._rows[-1], len(self._rows)))

    def row(self, n: int) -> tuple[int, ...]:
        _check_nonneg(n=n)
        if n >= len(self._rows):
            if self.frozen:
                raise IndexError(f"{self.kind.value} triangle is frozen at {len(self._rows) - 1} rows")
            self._grow(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        _check_nonneg(n=n, k=k)
        if k > n:
            return 0
        return self.row(n)[k]

    def rows(self, n_max: int) -> list[tuple[int, ...]]:
        self.row(n_max)
        return self._rows[: n_max + 1]


_TRIANGLES: dict[TriangleKind, TriangleCache] = {kind: TriangleCache(kind) for kind in TriangleKind}


def triangle(kind: TriangleKind) -> TriangleCache:
    """The process-wide cache for ``kind``."""
    return _TRIANGLES[kind]


@contextmanager
def override_triangle(kind: TriangleKind, rows: Sequence[Sequence[int]]) -> Iterator[TriangleCache]:
    """Temporarily replace a triangle by externally computed rows.

    Used to cross-check results against tables produced some other way
    (e.g. by generating-function extraction).  Not safe to combine with
    concurrent evaluation in other threads.
    """
    frozen = TriangleCache(kind, rows)
    saved = _TRIANGLES[kind]
    _TRIANGLES[kind] = frozen
    exp_poly_eval.cache_clear()
    try:
        yield frozen
    finally:
        _TRIANGLES[kind] = saved
        exp_poly_eval.cache_clear()


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    return _TRIANGLES[TriangleKind.STIRLING2](n, k)


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    return _TRIANGLES[TriangleKind.STIRLING_SIGNED](n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind, ``(-1)**(n-k) * s(n, k)``."""
    return _TRIANGLES[TriangleKind.STIRLING_UNSIGNED](n, k)


def lah(n: int, k: int) -> int:
    """Lah number L(n, k) = n!/k! * C(n-1, k-1), with L(0, 0) = 1."""
    return _TRIANGLES[TriangleKind.LAH](n, k)


def binom_int(n: int, k: int) -> int:
    _check_nonneg(n=n, k=k)
    return math.comb(n, k)


def binom_gen(x: Rational, n: int) -> Rational:
    """Generalized binomial coefficient x(x-1)...(x-n+1)/n! for rational ``x``.

    Integer ``x`` gives an ``int`` back; anything else a ``Fraction``.
    """
    _check_nonneg(n=n)
    if isinstance(x, int) and not isinstance(x, bool):
        if x >= 0:
            return math.comb(x, n)
        # C(-m, n) = (-1)^n C(m+n-1, n)
        return (-1) ** n * math.comb(-x + n - 1, n)
    x = Fraction(x)
    if x.denominator == 1:
        return binom_gen(x.numerator, n)
    num = Fraction(1)
    for i in range(n):
        num *= x - i
    return num / math.factorial(n)


_bell_values: list[int] = [1]
_bell_last_row: list[int] = [1]
_bell_lock = threading.Lock()


def bell(n: int) -> int:
    """Bell number b_n.

    Built from the Bell (Peirce) triangle, which does not go through the
    Stirling table; ``sum(stirling2(n, k))`` is therefore an honest check.
    """
    _check_nonneg(n=n)
    global _bell_last_row
    if n >= len(_bell_values):
        with _bell_lock:
            row = _bell_last_row
            while len(_bell_values) <= n:
                nxt = [row[-1]]
                for v in row:
                    nxt.append(nxt[-1] + v)
                row = nxt
                _bell_values.append(row[0])
            _bell_last_row = row
    return _bell_values[n]


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with exact coefficients in ascending degree order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        c = [Fraction(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)


def exp_poly(n: int) -> Polynomial:
    """Exponential (Touchard) polynomial phi_n(x) = sum_k S(n, k) x^k."""
    return Polynomial(tuple(Fraction(v) for v in _TRIANGLES[TriangleKind.STIRLING2].row(n)))


@lru_cache(maxsize=4096)
def exp_poly_eval(n: int, x: Rational) -> Fraction:
    _check_nonneg(n=n)
    acc = Fraction(0)
    for c in reversed(_TRIANGLES[TriangleKind.STIRLING2].row(n)):
        acc = acc * x + c
    return Fraction(acc)


def laguerre(n: int, q: int, x: Rational) -> Fraction:
    """Generalized Laguerre polynomial L_n^(q)(x) for integer ``q >= -1``.

    Evaluated as sum_i (-1)^i C(n+q, n-i) x^i / i!.
    """
    _check_nonneg(n=n)
    if not isinstance(q, int) or q < -1:
        raise ValueError(f"Laguerre order q must be an integer >= -1, got {q!r}")
    x = Fraction(x)
    total = Fraction(0)
    power = Fraction(1)
    for i in range(n + 1):
        total += (-1) ** i * binom_gen(n + q, n - i) * power / math.factorial(i)
        power *= x
    return total
