"""Truncated power series over the rationals and the sequence transforms.

A :class:`Series` stores raw coefficients ``c_0..c_N`` of a power series in
``t``.  The flavor tag says how to read it as a sequence: for an EGF the
sequence term is ``a_n = c_n * n!``, for an OGF it is ``c_n`` itself.  The
algebra (product, power, exp, log, composition) works on raw coefficients
and so does not care about the flavor, except that binary operations refuse
to mix flavors.

The transforms come in two independent implementations:

* :func:`apply_transform` evaluates the coefficient sums directly from the
  kernel triangles, e.g. ``b_n = sum_k S(n,k) lam^(n-k) mu^k a_k``;
* :func:`transform_by_composition` builds the corresponding generating
  function (``f((mu/lam)(e^(lam t) - 1))`` and friends) with series algebra
  only.

:func:`dual_path_check` compares the two.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import kernel

Rational = Union[int, Fraction]


class Flavor(enum.Enum):
    EGF = "EGF"
    OGF = "OGF"


class FlavorError(ValueError):
    pass


def _lcm_den(values: Sequence[Fraction]) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, v.denominator)
    return d


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> list[Fraction]:
    # integer convolution over a common denominator; much faster than Fraction sums
    da, db = _lcm_den(a[: order + 1]), _lcm_den(b[: order + 1])
    ia = [int(v * da) for v in a[: order + 1]]
    ib = [int(v * db) for v in b[: order + 1]]
    den = da * db
    out = []
    for n in range(order + 1):
        acc = 0
        for k in range(n + 1):
            x = ia[k]
            if x:
                acc += x * ib[n - k]
        out.append(Fraction(acc, den))
    return out


@dataclass(frozen=True)
class Series:
    """Power series truncated after ``t**order``; immutable."""

    flavor: Flavor
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def terms(self) -> list[Fraction]:
        """Sequence view: ``c_n * n!`` for EGF, ``c_n`` for OGF."""
        if self.flavor is Flavor.OGF:
            return list(self.coeffs)
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.flavor, self.coeffs[: order + 1])

    def retag(self, flavor: Flavor) -> Series:
        """Same raw coefficients, read with another flavor."""
        return Series(flavor, self.coeffs)

    def _check(self, other: Series) -> int:
        if self.flavor is not other.flavor:
            raise FlavorError(f"flavor mismatch: {self.flavor.value} vs {other.flavor.value}")
        return min(self.order, other.order)

    def __add__(self, other: Series | Rational) -> Series:
        if not isinstance(other, Series):
            return Series(self.flavor, (self.coeffs[0] + other,) + self.coeffs[1:])
        order = self._check(other)
        return Series(self.flavor, tuple(a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series(self.flavor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Series | Rational) -> Series:
        return self + (-other)

    def __rsub__(self, other: Rational) -> Series:
        return (-self) + other

    def __mul__(self, other: Series | Rational) -> Series:
        if isinstance(other, Series):
            return series_mul(self, other)
        return Series(self.flavor, tuple(c * other for c in self.coeffs))

    def __rmul__(self, other: Rational) -> Series:
        return self * other

    def __truediv__(self, scalar: Rational) -> Series:
        return Series(self.flavor, tuple(c / scalar for c in self.coeffs))

    def __pow__(self, p: int) -> Series:
        return series_pow(self, p)


def series_new(flavor: Flavor, order: int, sequence: Sequence[Rational]) -> Series:
    """Build a series from a sequence ``a_0..a_order`` read per ``flavor``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if len(sequence) < order + 1:
        raise ValueError(f"need {order + 1} terms for order {order}, got {len(sequence)}")
    seq = [Fraction(a) for a in sequence[: order + 1]]
    if flavor is Flavor.EGF:
        seq = [a / math.factorial(n) for n, a in enumerate(seq)]
    return Series(flavor, tuple(seq))


def from_coeffs(coeffs: Iterable[Rational], flavor: Flavor = Flavor.EGF) -> Series:
    return Series(flavor, tuple(Fraction(c) for c in coeffs))


def constant(c: Rational, order: int, flavor: Flavor = Flavor.EGF) -> Series:
    return Series(flavor, (Fraction(c),) + (Fraction(0),) * order)


def monomial(p: int, order: int, coeff: Rational = 1, flavor: Flavor = Flavor.EGF) -> Series:
    """``coeff * t**p`` truncated at ``order``."""
    return Series(flavor, tuple(Fraction(coeff) if n == p else Fraction(0) for n in range(order + 1)))


def exp_linear(lam: Rational, order: int, flavor: Flavor = Flavor.EGF) -> Series:
    """e^(lam t)."""
    lam = Fraction(lam)
    return Series(flavor, tuple(lam**n / math.factorial(n) for n in range(order + 1)))


def geometric(lam: Rational, order: int, flavor: Flavor = Flavor.EGF) -> Series:
    """1 / (1 - lam t)."""
    lam = Fraction(lam)
    return Series(flavor, tuple(lam**n for n in range(order + 1)))


def log1p_linear(lam: Rational, order: int, flavor: Flavor = Flavor.EGF) -> Series:
    """log(1 + lam t)."""
    lam = Fraction(lam)
    return Series(flavor, (Fraction(0),) + tuple((-1) ** (n - 1) * lam**n / n for n in range(1, order + 1)))


def log1p_over_t(order: int, flavor: Flavor = Flavor.OGF) -> Series:
    """log(1 + t) / t."""
    return Series(flavor, tuple(Fraction((-1) ** n, n + 1) for n in range(order + 1)))


def binomial_power(mu: Rational, order: int, flavor: Flavor = Flavor.EGF) -> Series:
    """(1 + t)^mu from generalized binomial coefficients."""
    return Series(flavor, tuple(Fraction(kernel.binom_gen(Fraction(mu), n)) for n in range(order + 1)))


def series_mul(f: Series, g: Series) -> Series:
    """Cauchy product, truncated to the smaller order."""
    order = f._check(g)
    return Series(f.flavor, tuple(_convolve(f.coeffs, g.coeffs, order)))


def series_pow(f: Series, p: int) -> Series:
    if not isinstance(p, int) or p < 0:
        raise ValueError(f"power must be a nonnegative integer, got {p!r}")
    result = constant(1, f.order, f.flavor)
    base = f
    while p:
        if p & 1:
            result = series_mul(result, base)
        p >>= 1
        if p:
            base = series_mul(base, base)
    return result


def _require_zero_constant(f: Series, what: str) -> None:
    if f.coeffs[0] != 0:
        raise ValueError(f"{what} needs a zero constant term, got {f.coeffs[0]}")


def series_exp(f: Series) -> Series:
    """exp(f) for ``f(0) = 0``, via n g_n = sum_k k f_k g_(n-k)."""
    _require_zero_constant(f, "exp")
    c = f.coeffs
    g = [Fraction(1)]
    for n in range(1, f.order + 1):
        g.append(sum((k * c[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
    return Series(f.flavor, tuple(g))


def series_log1p(f: Series) -> Series:
    """log(1 + f) for ``f(0) = 0``, via (1 + f) g' = f'."""
    _require_zero_constant(f, "log1p")
    c = f.coeffs
    g = [Fraction(0)]
    for n in range(1, f.order + 1):
        acc = n * c[n] - sum((k * g[k] * c[n - k] for k in range(1, n)), Fraction(0))
        g.append(acc / n)
    return Series(f.flavor, tuple(g))


def series_compose(f: Series, g: Series) -> Series:
    """f(g(t)) for ``g(0) = 0``; carries the flavor of ``f``.

    Composition acts on raw coefficients, so the inner series may be tagged
    either way.
    """
    _require_zero_constant(g, "inner series of a composition")
    order = min(f.order, g.order)
    inner = Series(f.flavor, g.coeffs[: order + 1])
    acc = constant(f.coeffs[order], order, f.flavor)
    for k in range(order - 1, -1, -1):
        acc = series_mul(acc, inner) + f.coeffs[k]
    return acc


class GFKind(enum.Enum):
    STIRLING2 = "stirling2"
    STIRLING1 = "stirling1"
    LAH = "lah"
    BINOM_COL = "binom"


def kernel_gf(kind: GFKind, p: int, order: int) -> Series:
    """Column generating functions, as EGFs truncated at ``order``.

    STIRLING2: (e^t - 1)^p / p!     STIRLING1: log^p(1 + t) / p!
    LAH:       (t / (1 - t))^p / p!  BINOM_COL: t^p e^t / p!

    Built from series algebra only, never from the kernel triangles, so the
    sequence views serve as an oracle for them.
    """
    if kind is GFKind.STIRLING2:
        base = exp_linear(1, order) - 1
    elif kind is GFKind.STIRLING1:
        base = log1p_linear(1, order)
    elif kind is GFKind.LAH:
        base = geometric(1, order) - 1
    elif kind is GFKind.BINOM_COL:
        return series_mul(monomial(p, order), exp_linear(1, order)) / math.factorial(p)
    else:
        raise ValueError(kind)
    return series_pow(base, p) / math.factorial(p)


class TransformName(enum.Enum):
    STIRLING2 = "stirling2"
    STIRLING1 = "stirling1"
    LAH = "lah"
    BINOMIAL = "binomial"
    EULER = "euler"
    GEOMSUM = "geomsum"
    LOGDIVIDE = "logdivide"


_EGF_TRANSFORMS = {TransformName.STIRLING2, TransformName.STIRLING1, TransformName.LAH, TransformName.BINOMIAL}


@dataclass(frozen=True)
class TransformKind:
    """A series transform and its parameters.

    ``mu`` is ignored by BINOMIAL and GEOMSUM; LOGDIVIDE takes no parameter.
    """

    name: TransformName
    lam: Fraction = Fraction(1)
    mu: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "mu", Fraction(self.mu))

    @property
    def flavor(self) -> Flavor:
        return Flavor.EGF if self.name in _EGF_TRANSFORMS else Flavor.OGF

    @classmethod
    def stirling2(cls, lam: Rational = 1, mu: Rational = 1) -> TransformKind:
        return cls(TransformName.STIRLING2, lam, mu)

    @classmethod
    def stirling1(cls, lam: Rational = 1, mu: Rational = 1) -> TransformKind:
        return cls(TransformName.STIRLING1, lam, mu)

    @classmethod
    def lah(cls, lam: Rational = 1, mu: Rational = 1) -> TransformKind:
        return cls(TransformName.LAH, lam, mu)

    @classmethod
    def binomial(cls, lam: Rational = 1) -> TransformKind:
        return cls(TransformName.BINOMIAL, lam)

    @classmethod
    def euler(cls, lam: Rational = 1, mu: Rational = 1) -> TransformKind:
        return cls(TransformName.EULER, lam, mu)

    @classmethod
    def geomsum(cls, lam: Rational = 1) -> TransformKind:
        return cls(TransformName.GEOMSUM, lam)

    @classmethod
    def logdivide(cls) -> TransformKind:
        return cls(TransformName.LOGDIVIDE)


def _check_flavor(kind: TransformKind, a: Series) -> None:
    if a.flavor is not kind.flavor:
        raise FlavorError(f"{kind.name.value} expects an {kind.flavor.value} series, got {a.flavor.value}")


def apply_transform(kind: TransformKind, a: Series) -> Series:
    """Transform ``a`` by evaluating the coefficient sums directly.

    The output has the same flavor and order as the input.  ``0**0`` is 1, so
    ``lam = 0`` is fine here (only the ``k = n`` term survives).
    """
    _check_flavor(kind, a)
    lam, mu, N = kind.lam, kind.mu, a.order
    name = kind.name

    if name is TransformName.LOGDIVIDE:
        c = a.coeffs
        out = [sum((c[k] * Fraction((-1) ** (n - k), n - k + 1) for k in range(n + 1)), Fraction(0)) for n in range(N + 1)]
        return Series(Flavor.OGF, tuple(out))

    seq = a.terms()
    lam_pow = [lam**j for j in range(N + 1)]
    mu_pow = [mu**j for j in range(N + 1)]
    if name is TransformName.STIRLING2:
        weight = kernel.stirling2
    elif name is TransformName.STIRLING1:
        weight = kernel.stirling1_signed
    elif name is TransformName.LAH:
        weight = kernel.lah
    elif name in (TransformName.BINOMIAL, TransformName.EULER):
        weight = kernel.binom_int
    else:
        weight = None
    if name in (TransformName.BINOMIAL, TransformName.GEOMSUM):
        mu_pow = [Fraction(1)] * (N + 1)

    out = []
    for n in range(N + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            w = 1 if weight is None else weight(n, k)
            if w and seq[k]:
                acc += w * lam_pow[n - k] * mu_pow[k] * seq[k]
        out.append(acc)
    return series_new(kind.flavor, N, out)


def transform_by_composition(kind: TransformKind, a: Series) -> Series:
    """Transform ``a`` by building the generating function on the left side.

    STIRLING2 and STIRLING1 need ``lam != 0``.
    """
    _check_flavor(kind, a)
    lam, mu, N, fl = kind.lam, kind.mu, a.order, a.flavor
    name = kind.name
    if name in (TransformName.STIRLING2, TransformName.STIRLING1) and lam == 0:
        raise ValueError(f"{name.value} composition path needs lam != 0")

    if name is TransformName.STIRLING2:
        inner = (exp_linear(lam, N, fl) - 1) * (mu / lam)
        return series_compose(a, inner)
    if name is TransformName.STIRLING1:
        return series_compose(a, log1p_linear(lam, N, fl) * (mu / lam))
    if name is TransformName.LAH:
        return series_compose(a, _mobius_inner(lam, mu, N, fl))
    if name is TransformName.BINOMIAL:
        return series_mul(exp_linear(lam, N, fl), a)
    if name is TransformName.EULER:
        return series_mul(geometric(lam, N, fl), series_compose(a, _mobius_inner(lam, mu, N, fl)))
    if name is TransformName.GEOMSUM:
        return series_mul(geometric(lam, N, fl), a)
    return series_mul(log1p_over_t(N, fl), a)


def _mobius_inner(lam: Fraction, mu: Fraction, order: int, flavor: Flavor) -> Series:
    # mu t / (1 - lam t)
    return series_mul(monomial(1, order, mu, flavor), geometric(lam, order, flavor))


def dual_path_check(kind: TransformKind, a: Series) -> bool:
    """True iff the direct sums and the generating-function side agree exactly."""
    return apply_transform(kind, a) == transform_by_composition(kind, a)
