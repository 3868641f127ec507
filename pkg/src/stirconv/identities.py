"""Registry of convolution identities, each checked by evaluating both sides.

Every entry pairs a left-hand evaluator (the convolution, summed directly
over the kernel triangles) with a right-hand evaluator that reaches the
value another way: a shifted triangle lookup, a Laguerre or exponential
polynomial, a generalized-binomial sum, or a truncated generating function.

Some entries document claims that are false as printed.  Their expected
verdict is recorded here, next to the formula, so callers never have to
special-case them.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence, Union

from . import kernel
from . import series as ser
from .kernel import binom_int as C
from .kernel import lah as L
from .kernel import stirling1_signed as _s1
from .kernel import stirling1_unsigned as _c1
from .kernel import stirling2 as _s2

Rational = Union[int, Fraction]

DEFAULT_MU: tuple[Fraction, ...] = tuple(
    Fraction(v) for v in ("-2", "-1", "-1/2", "1/3", "1/2", "3/4", "1", "2")
)
DEFAULT_Z: tuple[Fraction, ...] = tuple(Fraction(v) for v in ("-3/2", "-1", "1/2", "1", "4"))


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def s(n: int, k: int) -> int:
    """Signed s(n, k), zero for a negative row index."""
    return _s1(n, k) if n >= 0 else 0


def S(n: int, k: int) -> int:
    return _s2(n, k) if n >= 0 else 0


def _total(terms) -> Fraction:
    return Fraction(sum(terms))


def _delta(a: int, b: int) -> Fraction:
    return Fraction(1 if a == b else 0)


class IdentityId(enum.Enum):
    EQ12 = "EQ12"
    EQ13 = "EQ13"
    EQ14 = "EQ14"
    EQ15 = "EQ15"
    EQ15_MU2 = "EQ15_MU2"
    EQ17 = "EQ17"
    EQ18 = "EQ18"
    EQ19 = "EQ19"
    EQ20 = "EQ20"
    EQ21 = "EQ21"
    EQ22 = "EQ22"
    EQ23 = "EQ23"
    EQ23_P0 = "EQ23_P0"
    EQ23_P1 = "EQ23_P1"
    PHI_REC = "PHI_REC"
    EQ25 = "EQ25"
    EQ26 = "EQ26"
    EQ27 = "EQ27"
    EQ27_BINOM = "EQ27_BINOM"
    EQ28 = "EQ28"
    EQ29 = "EQ29"
    EQ30_PRINTED = "EQ30_PRINTED"
    EQ30_CORRECTED = "EQ30_CORRECTED"
    EQ31_PRINTED = "EQ31_PRINTED"
    EQ31_CORRECTED = "EQ31_CORRECTED"
    EQ32 = "EQ32"
    EQ33_ORTHO = "EQ33_ORTHO"
    EQ33_ORTHO_INV = "EQ33_ORTHO_INV"
    EQ34 = "EQ34"
    EQ34_Z1 = "EQ34_Z1"
    EQ34_ZM1 = "EQ34_ZM1"
    EQ35 = "EQ35"
    EQ37_POS = "EQ37_POS"
    EQ37_CEX = "EQ37_CEX"
    EQ38_EXPANSION = "EQ38_EXPANSION"
    EQ38_UNSIGNED_POS = "EQ38_UNSIGNED_POS"
    EQ38_REMARK_POS = "EQ38_REMARK_POS"


class Shape(enum.Enum):
    TRIANGLE = "triangle"  # 0 <= p <= n <= n_max
    SQUARE = "square"  # 0 <= n, p <= n_max
    COLUMN = "column"  # n only; p is reported as 0
    POINT = "point"  # fixed instances


class Relation(enum.Enum):
    EQUAL = "equal"
    POSITIVE = "positive"  # lhs > 0; rhs is reported as the threshold 0


class Expect(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EITHER = "either"

    def met_by(self, passed: bool) -> bool:
        return self is Expect.EITHER or passed == (self is Expect.PASS)


@dataclass(frozen=True)
class IdentityInstance:
    id: IdentityId
    n: int
    p: int = 0
    mu: Optional[Fraction] = None
    z: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.n < 0 or self.p < 0:
            raise ValueError("n and p must be nonnegative")
        if self.mu is not None:
            object.__setattr__(self, "mu", Fraction(self.mu))
        if self.z is not None:
            object.__setattr__(self, "z", Fraction(self.z))


@dataclass(frozen=True)
class CheckReport:
    instance: IdentityInstance
    lhs: Fraction
    rhs: Fraction
    passed: bool
    expected: Expect = Expect.PASS
    note: str = ""

    @property
    def as_expected(self) -> bool:
        return self.expected.met_by(self.passed)


Evaluator = Callable[[IdentityInstance], Fraction]


def _always(n: int, p: int) -> bool:
    return True


def _any_param(x: Fraction) -> bool:
    return True


def _unit_interval(x: Fraction) -> bool:
    return 0 < x < 1


@dataclass(frozen=True)
class Identity:
    id: IdentityId
    lhs: Evaluator
    rhs: Evaluator
    shape: Shape = Shape.TRIANGLE
    param: Optional[str] = None  # "mu" or "z"
    relation: Relation = Relation.EQUAL
    sign: int = 0  # for EQUAL: additionally require sign(lhs) == sign
    applies: Callable[[int, int], bool] = _always
    param_ok: Callable[[Fraction], bool] = _any_param
    expect: Callable[[IdentityInstance], Expect] = lambda inst: Expect.PASS
    points: tuple[tuple[int, int, Fraction], ...] = ()
    note: str = ""


def _mu(inst: IdentityInstance) -> Fraction:
    if inst.mu is None:
        raise ValueError(f"{inst.id.value} needs a mu parameter")
    return inst.mu


def _z(inst: IdentityInstance) -> Fraction:
    if inst.z is None:
        raise ValueError(f"{inst.id.value} needs a z parameter")
    return inst.z


# ---------------------------------------------------------------- evaluators


def _binom_stirling2(i: IdentityInstance) -> Fraction:
    n, p = i.n, i.p
    return _total(C(n, k) * S(k, p) for k in range(n + 1))


def _s1_binom_weighted(i: IdentityInstance, weight: Rational) -> Fraction:
    # sum_k s(n,k) C(k,p) weight^k
    n, p = i.n, i.p
    return _total(s(n, k) * C(k, p) * Fraction(weight) ** k for k in range(p, n + 1))


def _todorov(n: int, p: int, z: Rational) -> Fraction:
    # (-1)^p n!/p! sum_j C(p,j) (-1)^j C(zj, n)
    z = Fraction(z)
    acc = _total(C(p, j) * _sign(j) * kernel.binom_gen(z * j, n) for j in range(p + 1))
    return _sign(p) * Fraction(math.factorial(n), math.factorial(p)) * acc


def _s1_s2_weighted(n: int, p: int, x: Fraction) -> Fraction:
    # sum_k s(n,k) S(k,p) x^k
    return _total(s(n, k) * S(k, p) * x**k for k in range(p, n + 1))


def _series_order(n: int) -> int:
    return (n // 16 + 1) * 16


@lru_cache(maxsize=1024)
def _todorov_series_terms(p: int, mu: Fraction, order: int) -> tuple[Fraction, ...]:
    # sequence view of ((1+t)^mu - 1)^p / p!
    base = ser.binomial_power(mu, order) - 1
    return tuple((ser.series_pow(base, p) / math.factorial(p)).terms())


@lru_cache(maxsize=256)
def _one_minus_power_terms(mu: Fraction, order: int) -> tuple[Fraction, ...]:
    # sequence view of 1 - (1-t)^mu
    bp = ser.binomial_power(mu, order)
    reflected = ser.from_coeffs(c * _sign(n) for n, c in enumerate(bp.coeffs))
    return tuple((1 - reflected).terms())


def _eq29_lhs(i: IdentityInstance) -> Fraction:
    n, p = i.n, i.p
    return _total(S(n, k) * L(k, p) * _sign(k) for k in range(p, n + 1))


def _eq30_printed_rhs(i: IdentityInstance) -> Fraction:
    n, p = i.n, i.p
    return _sign(p) * _total(S(n, k) * p ** (n - k) * _sign(n - k) for k in range(p, n + 1))


def _eq30_corrected_rhs(i: IdentityInstance) -> Fraction:
    n, p = i.n, i.p
    return _sign(p) * _total(C(n, k) * S(k, p) * p ** (n - k) * _sign(n - k) for k in range(p, n + 1))


def _eq31_printed_rhs(i: IdentityInstance) -> Fraction:
    n, p = i.n, i.p
    return _sign(p) * _total(S(n, k) * p ** (n - k) * _sign(k) for k in range(p, n + 1))


def _eq31_corrected_rhs(i: IdentityInstance) -> Fraction:
    n, p = i.n, i.p
    return _sign(p) * _total(C(n, k) * S(k, p) * p ** (n - k) * _sign(k) for k in range(p, n + 1))


def _eq18_sum(n: int, p: int) -> Fraction:
    # (-1)^(n-1) sum_{k<n} (-1)^k / (n-k) * s(k+1,p) / (k+1)!
    acc = _total(Fraction(_sign(k) * s(k + 1, p), (n - k) * math.factorial(k + 1)) for k in range(n))
    return _sign(n - 1) * acc


def _binom_shift(k: int, p: int) -> int:
    # C(k-1, p-1) with the convention matching L(k,p) = k!/p! C(k-1,p-1): C(-1,-1) = 1
    if p == 0:
        return 1 if k == 0 else 0
    return C(k - 1, p - 1)


def _eq37_value(i: IdentityInstance) -> Fraction:
    return _sign(i.n - i.p) * _s1_s2_weighted(i.n, i.p, _mu(i))


def _printed_expect(i: IdentityInstance) -> Expect:
    return Expect.FAIL if (i.n, i.p) == (2, 1) else Expect.EITHER


def _eq37_expect(i: IdentityInstance) -> Expect:
    # (1 - (1-t)^mu)^0 = 1 has zero coefficients for n > 0
    return Expect.FAIL if i.p == 0 and i.n > 0 else Expect.PASS


def _rising_product(n: int, mu: Fraction) -> Fraction:
    # mu (1-mu)(2-mu)...(n-1-mu)
    out = Fraction(mu)
    for j in range(1, n):
        out *= j - mu
    return out


_ENTRIES = [
    Identity(
        IdentityId.EQ12,
        lhs=_binom_stirling2,
        rhs=lambda i: Fraction(S(i.n + 1, i.p + 1)),
    ),
    Identity(
        IdentityId.EQ13,
        lhs=lambda i: _total(s(i.n, k) * _sign(k) * C(k, i.p) for k in range(i.n + 1)),
        rhs=lambda i: Fraction(_sign(i.p) * s(i.n + 1, i.p + 1)),
    ),
    Identity(
        IdentityId.EQ14,
        lhs=lambda i: _s1_binom_weighted(i, 1),
        rhs=lambda i: Fraction(s(i.n, i.p) + i.n * s(i.n - 1, i.p)),
    ),
    Identity(
        IdentityId.EQ15,
        lhs=lambda i: _s1_binom_weighted(i, _mu(i)),
        rhs=lambda i: _mu(i) ** i.p
        * _total(
            C(i.n, k) * kernel.binom_gen(_mu(i), k) * s(i.n - k, i.p) * math.factorial(k) for k in range(i.n + 1)
        ),
        param="mu",
        note="upper summation limit n; binomial factor vanishes beyond",
    ),
    Identity(
        IdentityId.EQ15_MU2,
        lhs=lambda i: _s1_binom_weighted(i, 2),
        rhs=lambda i: Fraction(
            2**i.p * (s(i.n, i.p) + 2 * i.n * s(i.n - 1, i.p) + i.n * (i.n - 1) * s(i.n - 2, i.p))
        ),
    ),
    Identity(
        IdentityId.EQ17,
        lhs=lambda i: _total(
            Fraction(C(i.n, k) * s(k + 1, i.p), math.factorial(k + 1)) for k in range(i.n + 1)
        ),
        rhs=lambda i: Fraction(_sign(i.p - 1 + i.n) * s(i.n + 1, i.p), math.factorial(i.n + 1)),
    ),
    Identity(
        IdentityId.EQ18,
        lhs=lambda i: Fraction((i.p + 1) * s(i.n + 1, i.p + 1), math.factorial(i.n + 1)),
        rhs=lambda i: _eq18_sum(i.n, i.p),
        applies=lambda n, p: p >= 1,
        note="needs log^p(1+t)/t to be a power series, so p >= 1",
    ),
    Identity(
        IdentityId.EQ19,
        lhs=lambda i: Fraction(s(i.n + 1, i.p + 1)),
        rhs=lambda i: Fraction(math.factorial(i.n + 1), i.p + 1) * _eq18_sum(i.n, i.p),
        applies=lambda n, p: p >= 1,
        note="needs log^p(1+t)/t to be a power series, so p >= 1",
    ),
    Identity(
        IdentityId.EQ20,
        lhs=lambda i: Fraction(s(i.n + 1, i.p + 1)),
        rhs=lambda i: _total(
            C(i.n, m) * _sign(m) * s(i.n - m, i.p) * math.factorial(m) for m in range(i.n + 1)
        ),
    ),
    Identity(
        IdentityId.EQ21,
        lhs=lambda i: _total(Fraction(C(i.n, k) * s(k, i.p), math.factorial(k)) for k in range(i.n + 1)),
        rhs=lambda i: Fraction(_sign(i.n - i.p) * s(i.n + 1, i.p + 1), math.factorial(i.n)),
    ),
    Identity(
        IdentityId.EQ22,
        lhs=lambda i: _total(S(i.n, k) * C(k, i.p) * _mu(i) ** k for k in range(i.p, i.n + 1)),
        rhs=lambda i: _mu(i) ** i.p
        * _total(C(i.n, k) * S(k, i.p) * kernel.exp_poly_eval(i.n - k, _mu(i)) for k in range(i.p, i.n + 1)),
        param="mu",
    ),
    Identity(
        IdentityId.EQ23,
        lhs=lambda i: _total(S(i.n, k) * C(k, i.p) for k in range(i.p, i.n + 1)),
        rhs=lambda i: _total(C(i.n, k) * S(k, i.p) * kernel.bell(i.n - k) for k in range(i.p, i.n + 1)),
    ),
    Identity(
        IdentityId.EQ23_P0,
        lhs=lambda i: _total(S(i.n, k) for k in range(i.n + 1)),
        rhs=lambda i: Fraction(kernel.bell(i.n)),
        shape=Shape.COLUMN,
    ),
    Identity(
        IdentityId.EQ23_P1,
        lhs=lambda i: _total(S(i.n, k) * k for k in range(i.n + 1)),
        rhs=lambda i: Fraction(kernel.bell(i.n + 1) - kernel.bell(i.n)),
        shape=Shape.COLUMN,
    ),
    Identity(
        IdentityId.PHI_REC,
        lhs=lambda i: kernel.exp_poly_eval(i.n + 1, _mu(i)),
        rhs=lambda i: _mu(i) * _total(C(i.n, k) * kernel.exp_poly_eval(k, _mu(i)) for k in range(i.n + 1)),
        shape=Shape.COLUMN,
        param="mu",
    ),
    Identity(
        IdentityId.EQ25,
        lhs=lambda i: _total(L(i.n, k) * C(k, i.p) * _mu(i) ** k for k in range(i.p, i.n + 1)),
        rhs=lambda i: _mu(i) ** i.p
        * Fraction(math.factorial(i.n), math.factorial(i.p))
        * kernel.laguerre(i.n - i.p, i.p - 1, -_mu(i)),
        param="mu",
    ),
    Identity(
        IdentityId.EQ26,
        lhs=lambda i: _total(L(i.n, k) * _mu(i) ** k for k in range(i.n + 1)),
        rhs=lambda i: math.factorial(i.n) * kernel.laguerre(i.n, -1, -_mu(i)),
        shape=Shape.COLUMN,
        param="mu",
    ),
    Identity(
        IdentityId.EQ27,
        lhs=lambda i: _total(
            Fraction(C(i.n, k) * L(k, i.p) * _sign(k), math.factorial(k)) for k in range(i.p, i.n + 1)
        ),
        rhs=lambda i: Fraction(_sign(i.p), math.factorial(i.p)),
    ),
    Identity(
        IdentityId.EQ27_BINOM,
        lhs=lambda i: _total(C(i.n, k) * _binom_shift(k, i.p) * _sign(k) for k in range(i.p, i.n + 1)),
        rhs=lambda i: Fraction(_sign(i.p)),
        note="C(k-1, p-1) at p = 0 read as [k = 0]",
    ),
    Identity(
        IdentityId.EQ28,
        lhs=lambda i: Fraction(L(i.n, i.p)),
        rhs=lambda i: _total(_c1(i.n, k) * S(k, i.p) for k in range(i.p, i.n + 1)),
    ),
    Identity(
        IdentityId.EQ29,
        lhs=_eq29_lhs,
        rhs=lambda i: Fraction(_sign(i.n) * S(i.n, i.p)),
    ),
    Identity(
        IdentityId.EQ30_PRINTED,
        lhs=_eq29_lhs,
        rhs=_eq30_printed_rhs,
        expect=_printed_expect,
        note="as printed: lacks C(n,k) and has S(n,k) for S(k,p)",
    ),
    Identity(
        IdentityId.EQ30_CORRECTED,
        lhs=_eq29_lhs,
        rhs=_eq30_corrected_rhs,
    ),
    Identity(
        IdentityId.EQ31_PRINTED,
        lhs=lambda i: Fraction(S(i.n, i.p)),
        rhs=_eq31_printed_rhs,
        expect=_printed_expect,
        note="as printed: lacks C(n,k) and has S(n,k) for S(k,p)",
    ),
    Identity(
        IdentityId.EQ31_CORRECTED,
        lhs=lambda i: Fraction(S(i.n, i.p)),
        rhs=_eq31_corrected_rhs,
    ),
    Identity(
        IdentityId.EQ32,
        lhs=lambda i: _total(L(i.n, k) * s(k, i.p) for k in range(i.p, i.n + 1)),
        rhs=lambda i: Fraction(_sign(i.n + i.p) * s(i.n, i.p)),
    ),
    Identity(
        IdentityId.EQ33_ORTHO,
        lhs=lambda i: _total(S(i.n, k) * s(k, i.p) for k in range(i.n + 1)),
        rhs=lambda i: _delta(i.n, i.p),
        shape=Shape.SQUARE,
    ),
    Identity(
        IdentityId.EQ33_ORTHO_INV,
        lhs=lambda i: _total(s(i.n, k) * S(k, i.p) for k in range(i.n + 1)),
        rhs=lambda i: _delta(i.n, i.p),
        shape=Shape.SQUARE,
    ),
    Identity(
        IdentityId.EQ34,
        lhs=lambda i: _s1_s2_weighted(i.n, i.p, _z(i)),
        rhs=lambda i: _todorov(i.n, i.p, _z(i)),
        param="z",
    ),
    Identity(
        IdentityId.EQ34_Z1,
        lhs=lambda i: _todorov(i.n, i.p, 1),
        rhs=lambda i: _delta(i.n, i.p),
    ),
    Identity(
        IdentityId.EQ34_ZM1,
        lhs=lambda i: _todorov(i.n, i.p, -1),
        rhs=lambda i: Fraction(_sign(i.n) * L(i.n, i.p)),
    ),
    Identity(
        IdentityId.EQ35,
        lhs=lambda i: _s1_s2_weighted(i.n, i.p, _mu(i)),
        rhs=lambda i: _todorov_series_terms(i.p, _mu(i), _series_order(i.n))[i.n],
        param="mu",
        note="series side ((1+t)^mu - 1)^p / p!, summation from n = p",
    ),
    Identity(
        IdentityId.EQ37_POS,
        lhs=_eq37_value,
        rhs=lambda i: Fraction(0),
        param="mu",
        relation=Relation.POSITIVE,
        param_ok=_unit_interval,
        expect=_eq37_expect,
        note="p = 0, n > 0 gives exactly 0, so strict positivity fails there",
    ),
    Identity(
        IdentityId.EQ37_CEX,
        lhs=_eq37_value,
        rhs=lambda i: _sign(i.n - i.p) * _todorov(i.n, i.p, _mu(i)),
        shape=Shape.POINT,
        param="mu",
        sign=-1,
        points=((4, 3, Fraction(3)),),
    ),
    Identity(
        IdentityId.EQ38_EXPANSION,
        lhs=lambda i: _one_minus_power_terms(_mu(i), _series_order(i.n))[i.n],
        rhs=lambda i: _rising_product(i.n, _mu(i)),
        shape=Shape.COLUMN,
        param="mu",
        sign=1,
        applies=lambda n, p: n >= 1,
        param_ok=_unit_interval,
    ),
    Identity(
        IdentityId.EQ38_UNSIGNED_POS,
        lhs=lambda i: _total(
            _sign(k + i.p) * _c1(i.n, k) * S(k, i.p) * _mu(i) ** k for k in range(i.p, i.n + 1)
        ),
        rhs=lambda i: Fraction(0),
        param="mu",
        relation=Relation.POSITIVE,
        applies=lambda n, p: n > p > 0,
        param_ok=_unit_interval,
    ),
    Identity(
        IdentityId.EQ38_REMARK_POS,
        lhs=lambda i: _total(_c1(i.n, k) * S(k, i.p) * _mu(i) ** k for k in range(i.p, i.n + 1)),
        rhs=lambda i: Fraction(0),
        param="mu",
        relation=Relation.POSITIVE,
        applies=lambda n, p: n > p > 0,
        param_ok=lambda x: x > 0,
    ),
]

REGISTRY: dict[IdentityId, Identity] = {e.id: e for e in _ENTRIES}
assert set(REGISTRY) == set(IdentityId)

# Identities whose printed statement fails somewhere in the grid.
PRINTED_TYPOS = frozenset({IdentityId.EQ30_PRINTED, IdentityId.EQ31_PRINTED})


def _validate(entry: Identity, inst: IdentityInstance) -> None:
    if entry.param == "mu":
        mu = _mu(inst)
        if not entry.param_ok(mu):
            raise ValueError(f"{inst.id.value}: mu = {mu} outside its domain")
    elif entry.param == "z":
        _z(inst)


def evaluate_lhs(inst: IdentityInstance) -> Fraction:
    entry = REGISTRY[inst.id]
    _validate(entry, inst)
    return Fraction(entry.lhs(inst))


def evaluate_rhs(inst: IdentityInstance) -> Fraction:
    entry = REGISTRY[inst.id]
    _validate(entry, inst)
    return Fraction(entry.rhs(inst))


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def check_instance(inst: IdentityInstance) -> CheckReport:
    """Evaluate both sides and give the exact verdict."""
    entry = REGISTRY[inst.id]
    lhs, rhs = evaluate_lhs(inst), evaluate_rhs(inst)
    if entry.relation is Relation.POSITIVE:
        passed = lhs > 0
    else:
        passed = lhs == rhs and (entry.sign == 0 or _sgn(lhs) == entry.sign)
    return CheckReport(inst, lhs, rhs, passed, entry.expect(inst), entry.note)


def instances(
    ident: IdentityId,
    n_max: int,
    mu_set: Sequence[Rational] | None = None,
    z_set: Sequence[Rational] | None = None,
) -> Iterator[IdentityInstance]:
    """Grid points of ``ident`` in (n, p, parameter) order."""
    entry = REGISTRY[ident]
    if entry.shape is Shape.POINT:
        for n, p, x in entry.points:
            if n <= n_max:
                yield IdentityInstance(ident, n, p, **{entry.param: x} if entry.param else {})
        return

    if entry.param == "mu":
        params = [Fraction(x) for x in (DEFAULT_MU if mu_set is None else mu_set)]
        params = [x for x in params if entry.param_ok(x)]
    elif entry.param == "z":
        params = [Fraction(x) for x in (DEFAULT_Z if z_set is None else z_set)]
    else:
        params = [None]

    for n in range(n_max + 1):
        if entry.shape is Shape.COLUMN:
            ps = [0]
        elif entry.shape is Shape.SQUARE:
            ps = range(n_max + 1)
        else:
            ps = range(n + 1)
        for p in ps:
            if not entry.applies(n, p):
                continue
            for x in params:
                kw = {entry.param: x} if entry.param else {}
                yield IdentityInstance(ident, n, p, **kw)


def check_grid(
    ident: IdentityId,
    n_max: int,
    mu_set: Sequence[Rational] | None = None,
    z_set: Sequence[Rational] | None = None,
    workers: int = 1,
) -> list[CheckReport]:
    """Check every grid point of ``ident``.

    ``mu_set``/``z_set`` default to :data:`DEFAULT_MU` and :data:`DEFAULT_Z`;
    values outside an identity's parameter domain are skipped.  With
    ``workers > 1`` the points are spread over processes; the report order
    is the same either way.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    points = list(instances(ident, n_max, mu_set, z_set))
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(check_instance, points, chunksize=max(1, len(points) // (4 * workers))))
    return [check_instance(inst) for inst in points]


def positivity_scan(n_max: int, mu: Rational) -> list[CheckReport]:
    """Sign of (-1)^(n-p) sum_k s(n,k) S(k,p) mu^k for all 0 <= p <= n <= n_max.

    For 0 < mu < 1 the reports are ordinary EQ37_POS checks.  At mu = 1 the
    sum must vanish for n > p (and be 1 on the diagonal).  For mu > 1 the
    reports record whether positivity happens to hold, with no expectation;
    they carry the EQ37_CEX id since the claim does not apply there.
    """
    mu = Fraction(mu)
    if mu <= 0:
        raise ValueError(f"mu must be positive, got {mu}")
    if mu < 1:
        return check_grid(IdentityId.EQ37_POS, n_max, [mu])
    out = []
    for n in range(n_max + 1):
        for p in range(n + 1):
            inst = IdentityInstance(IdentityId.EQ37_CEX, n, p, mu=mu)
            value = _eq37_value(inst)
            if mu == 1:
                passed = value == (1 if n == p else 0)
                out.append(CheckReport(inst, value, Fraction(int(n == p)), passed, Expect.PASS, "mu = 1 boundary"))
            else:
                out.append(CheckReport(inst, value, Fraction(0), value > 0, Expect.EITHER, "positivity outside (0,1)"))
    return out


# -------------------------------------------------------------- open problems


class ExploreId(enum.Enum):
    X_BINOM_S1 = "X_BINOM_S1"
    X_BINOM_S2_MU = "X_BINOM_S2_MU"
    X_BINOM_LAH = "X_BINOM_LAH"
    X_S2_LAH = "X_S2_LAH"
    X_LAH_S2 = "X_LAH_S2"
    X_S1_LAH = "X_S1_LAH"
    X_POLY_F = "X_POLY_F"


@dataclass(frozen=True)
class ExploreRow:
    n: int
    value: Fraction
    oracle: Optional[Fraction] = None
    poly: Optional[kernel.Polynomial] = field(default=None)

    @property
    def agrees(self) -> bool:
        return self.oracle is None or self.oracle == self.value


def _explore_direct(xid: ExploreId, n: int, p: int, mu: Fraction, lam: Fraction, z: Fraction) -> Fraction:
    if xid is ExploreId.X_BINOM_S1:
        return _total(C(n, k) * s(k, p) for k in range(n + 1))
    if xid is ExploreId.X_BINOM_S2_MU:
        return _total(C(n, k) * S(k, p) * mu**k for k in range(n + 1))
    if xid is ExploreId.X_BINOM_LAH:
        return _total(C(n, k) * L(k, p) * lam ** (n - k) for k in range(n + 1))
    if xid is ExploreId.X_S2_LAH:
        return _total(S(n, k) * L(k, p) for k in range(n + 1))
    if xid is ExploreId.X_LAH_S2:
        return _total(L(n, k) * S(k, p) for k in range(n + 1))
    if xid is ExploreId.X_S1_LAH:
        return _total(s(n, k) * L(k, p) for k in range(n + 1))
    return _total(S(n, k) * s(k, p) * z**k for k in range(n + 1))


def _explore_series(xid: ExploreId, p: int, order: int, mu: Fraction, lam: Fraction, z: Fraction) -> ser.Series:
    """The generating function whose sequence view is the convolution."""
    gf = ser.kernel_gf
    K = ser.GFKind
    one = ser.exp_linear(1, order) - 1  # e^t - 1
    if xid is ExploreId.X_BINOM_S1:
        return ser.series_mul(ser.exp_linear(1, order), gf(K.STIRLING1, p, order))
    if xid is ExploreId.X_BINOM_S2_MU:
        inner = ser.series_pow(ser.exp_linear(mu, order) - 1, p) / math.factorial(p)
        return ser.series_mul(ser.exp_linear(1, order), inner)
    if xid is ExploreId.X_BINOM_LAH:
        return ser.series_mul(ser.exp_linear(lam, order), gf(K.LAH, p, order))
    if xid is ExploreId.X_S2_LAH:
        return ser.series_compose(gf(K.LAH, p, order), one)
    if xid is ExploreId.X_LAH_S2:
        return ser.series_compose(gf(K.STIRLING2, p, order), ser.geometric(1, order) - 1)
    if xid is ExploreId.X_S1_LAH:
        return ser.series_compose(gf(K.LAH, p, order), ser.log1p_linear(1, order))
    return ser.series_compose(gf(K.STIRLING1, p, order), one * z)


def explore(
    xid: ExploreId,
    n_max: int,
    p: int,
    mu: Rational = 1,
    lam: Rational = 1,
    z: Rational = 1,
    oracle: bool = True,
) -> list[ExploreRow]:
    """Tabulate an open-problem convolution for ``p <= n <= n_max``.

    No closed form is claimed.  With ``oracle`` set, each row also carries the
    coefficient read off the generating function the convolution comes
    from; :attr:`ExploreRow.agrees` compares the two.  ``X_POLY_F`` rows hold
    the polynomial f_{n,p} and its value at ``z``.
    """
    if p < 0 or n_max < p:
        raise ValueError("need 0 <= p <= n_max")
    mu, lam, z = Fraction(mu), Fraction(lam), Fraction(z)
    terms = _explore_series(xid, p, n_max, mu, lam, z).terms() if oracle else None
    rows = []
    for n in range(p, n_max + 1):
        poly = None
        if xid is ExploreId.X_POLY_F:
            poly = kernel.Polynomial(tuple(S(n, k) * s(k, p) for k in range(n + 1)))
        rows.append(
            ExploreRow(
                n,
                _explore_direct(xid, n, p, mu, lam, z),
                terms[n] if terms is not None else None,
                poly,
            )
        )
    return rows
