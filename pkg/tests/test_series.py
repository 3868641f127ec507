import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from stirconv import kernel
from stirconv import series as ser
from stirconv.series import Flavor, Series, TransformKind, TransformName


def egf(terms):
    return ser.series_new(Flavor.EGF, len(terms) - 1, terms)


def ogf(terms):
    return ser.series_new(Flavor.OGF, len(terms) - 1, terms)


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
nonzero_rationals = small_rationals.filter(lambda x: x != 0)


@st.composite
def zero_constant_series(draw, max_order=12):
    order = draw(st.integers(1, max_order))
    tail = draw(st.lists(small_rationals, min_size=order, max_size=order))
    return ser.from_coeffs([F(0)] + tail)


def test_series_new_egf_all_ones_is_exp():
    assert egf([1, 1, 1, 1]) == ser.exp_linear(1, 3)
    assert egf([1, 1, 1, 1]).coeffs == (1, 1, F(1, 2), F(1, 6))


def test_series_new_ogf_constant():
    s = ser.series_new(Flavor.OGF, 2, [1, 0, 0])
    assert s == ser.constant(1, 2, Flavor.OGF)


def test_series_new_stirling_column():
    s = egf([kernel.stirling1_signed(n, 2) for n in range(5)])
    assert s == ser.kernel_gf(ser.GFKind.STIRLING1, 2, 4)


def test_series_new_too_short():
    with pytest.raises(ValueError):
        ser.series_new(Flavor.EGF, 4, [1, 2])


def test_series_new_uses_prefix():
    assert ser.series_new(Flavor.OGF, 1, [5, 6, 7]).coeffs == (5, 6)


def test_mul_identity_and_shift():
    g = ser.from_coeffs([F(1, 3), 2, -1, F(5, 2)])
    assert ser.series_mul(ser.constant(1, 3), g) == g
    geo = ser.geometric(1, 8)
    shifted = ser.series_mul(ser.monomial(3, 8), geo)
    assert shifted.coeffs == (0, 0, 0, 1, 1, 1, 1, 1, 1)


def test_mul_truncates_to_smaller_order():
    assert ser.series_mul(ser.exp_linear(1, 3), ser.exp_linear(1, 7)).order == 3


def test_mul_flavor_mismatch():
    with pytest.raises(ser.FlavorError):
        ser.series_mul(ser.constant(1, 2, Flavor.EGF), ser.constant(1, 2, Flavor.OGF))


def test_one_plus_t_times_log():
    # (1+t) log(1+t): n-th sequence term s(n,1) + n s(n-1,1) for n >= 1
    N = 6
    prod = ser.series_mul(ser.from_coeffs([1, 1] + [0] * (N - 1)), ser.log1p_linear(1, N))
    terms = prod.terms()
    for n in range(1, N + 1):
        assert terms[n] == kernel.stirling1_signed(n, 1) + n * kernel.stirling1_signed(n - 1, 1)


def test_pow_zero_is_one():
    assert ser.series_pow(ser.from_coeffs([3, 1, 4]), 0) == ser.constant(1, 2)


def test_pow_matches_repeated_mul():
    f = ser.from_coeffs([F(1, 2), -1, F(2, 3), 5, 0, 1])
    acc = ser.constant(1, 5)
    for p in range(7):
        assert ser.series_pow(f, p) == acc
        acc = ser.series_mul(acc, f)


@pytest.mark.parametrize("p", range(6))
def test_kernel_gf_columns(p):
    N = 12
    cols = {
        ser.GFKind.STIRLING2: kernel.stirling2,
        ser.GFKind.STIRLING1: kernel.stirling1_signed,
        ser.GFKind.LAH: kernel.lah,
        ser.GFKind.BINOM_COL: kernel.binom_int,
    }
    for kind, fn in cols.items():
        assert ser.kernel_gf(kind, p, N).terms() == [fn(n, p) for n in range(N + 1)]


def test_kernel_gf_examples():
    assert ser.kernel_gf(ser.GFKind.STIRLING2, 0, 5) == ser.constant(1, 5)
    assert ser.kernel_gf(ser.GFKind.STIRLING2, 2, 5).terms()[3] == 3
    assert ser.kernel_gf(ser.GFKind.BINOM_COL, 1, 4).terms()[3] == 3


def test_exp_examples():
    assert ser.series_exp(ser.constant(0, 4)) == ser.constant(1, 4)
    bell = ser.series_exp(ser.exp_linear(1, 10) - 1).terms()
    assert bell == [kernel.bell(n) for n in range(11)]
    assert ser.series_exp(ser.geometric(1, 4) - 1)[2] == F(3, 2)


def test_exp_matches_power_sum():
    f = ser.from_coeffs([0, F(1, 2), -2, F(1, 3), 1, 0, F(-3, 4)])
    direct = ser.constant(0, f.order)
    for k in range(f.order + 1):
        direct = direct + ser.series_pow(f, k) / math.factorial(k)
    assert ser.series_exp(f) == direct


def test_log1p_examples():
    assert ser.series_log1p(ser.constant(0, 5)) == ser.constant(0, 5)
    t = ser.monomial(1, 8)
    assert ser.series_log1p(t).terms() == [kernel.stirling1_signed(n, 1) for n in range(9)]
    assert ser.series_log1p(ser.exp_linear(1, 12) - 1) == ser.monomial(1, 12)


def test_log1p_matches_power_sum():
    f = ser.from_coeffs([0, 2, F(-1, 5), 3, F(1, 7), 1])
    direct = ser.constant(0, f.order)
    for k in range(1, f.order + 1):
        direct = direct + ser.series_pow(f, k) * F((-1) ** (k - 1), k)
    assert ser.series_log1p(f) == direct


def test_exp_log_reject_constant_term():
    with pytest.raises(ValueError):
        ser.series_exp(ser.constant(1, 3))
    with pytest.raises(ValueError):
        ser.series_log1p(ser.constant(1, 3))
    with pytest.raises(ValueError):
        ser.series_compose(ser.constant(1, 3), ser.constant(1, 3))


@settings(max_examples=60, deadline=None)
@given(zero_constant_series())
def test_exp_log_inverse(f):
    assert ser.series_log1p(ser.series_exp(f) - 1) == f
    assert ser.series_exp(ser.series_log1p(f)) - 1 == f


def test_compose_examples():
    f = ser.from_coeffs([F(1, 2), 3, -1, F(2, 9), 4])
    assert ser.series_compose(f, ser.monomial(1, 4)) == f
    mu = F(2, 3)
    N = 10
    phis = ser.series_compose(ser.exp_linear(1, N), (ser.exp_linear(1, N) - 1) * mu).terms()
    assert phis == [kernel.exp_poly_eval(n, mu) for n in range(N + 1)]
    p = 2
    out = ser.series_compose(ser.kernel_gf(ser.GFKind.STIRLING1, p, N), ser.geometric(1, N) - 1).terms()
    assert out == [(-1) ** (n + p) * kernel.stirling1_signed(n, p) for n in range(N + 1)]


@settings(max_examples=40, deadline=None)
@given(zero_constant_series(8), zero_constant_series(8), zero_constant_series(8))
def test_compose_is_associative(f, g, h):
    assert ser.series_compose(ser.series_compose(f, g), h) == ser.series_compose(f, ser.series_compose(g, h))


def test_apply_transform_examples():
    N = 10
    delta = egf([1] + [0] * N)
    assert ser.apply_transform(TransformKind.binomial(1), delta).terms() == [1] * (N + 1)
    ones = egf([1] * (N + 1))
    assert ser.apply_transform(TransformKind.stirling2(1, 1), ones).terms() == [kernel.bell(n) for n in range(N + 1)]
    p = 2
    a = egf([kernel.stirling1_signed(k, p) for k in range(9)])
    got = ser.apply_transform(TransformKind.lah(1, 1), a).terms()
    assert got == [(-1) ** (n + p) * kernel.stirling1_signed(n, p) for n in range(9)]


def test_apply_transform_lambda_zero():
    a = egf([F(1, 2), 3, -1, 7])
    # lam = 0 leaves only k = n: b_n = mu^n a_n
    out = ser.apply_transform(TransformKind.stirling2(0, 2), a).terms()
    assert out == [F(1, 2), 6, -4, 56]
    assert ser.apply_transform(TransformKind.binomial(0), a) == a
    with pytest.raises(ValueError):
        ser.transform_by_composition(TransformKind.stirling1(0, 1), a)


def test_apply_transform_flavor_mismatch():
    with pytest.raises(ser.FlavorError):
        ser.apply_transform(TransformKind.euler(), egf([1, 2]))
    with pytest.raises(ser.FlavorError):
        ser.apply_transform(TransformKind.lah(), ogf([1, 2]))


def test_geomsum_is_partial_sum():
    a = ogf([1, 0, 0, 0, 0])
    assert ser.apply_transform(TransformKind.geomsum(1), a).terms() == [1] * 5
    lam = F(-2, 3)
    b = ogf([F(k * k - 3, k + 1) for k in range(31)])
    assert ser.apply_transform(TransformKind.geomsum(lam), b) == ser.series_mul(ser.geometric(lam, 30, Flavor.OGF), b)


def test_logdivide_definition():
    a = ogf([1] + [0] * 6)
    out = ser.apply_transform(TransformKind.logdivide(), a).coeffs
    assert out == tuple(F((-1) ** n, n + 1) for n in range(7))


def test_stirling_orthogonality_on_sequences():
    rng = random.Random(7)
    N = 25
    a = egf([F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(N + 1)])
    there = ser.apply_transform(TransformKind.stirling2(1, 1), a)
    back = ser.apply_transform(TransformKind.stirling1(1, 1), there)
    assert back == a


def test_euler_reproduces_prop5_derivation():
    p = 2
    signed = ogf([F((-1) ** n * kernel.stirling1_signed(n, p), math.factorial(n)) for n in range(15)])
    assert ser.dual_path_check(TransformKind.euler(1, 1), signed)
    plain = ogf([F(kernel.stirling1_signed(n, p), math.factorial(n)) for n in range(15)])
    out = ser.apply_transform(TransformKind.euler(1, 1), plain).terms()
    s = kernel.stirling1_signed
    assert out == [F((-1) ** (n + p) * s(n + 1, p + 1), math.factorial(n)) for n in range(15)]


def test_dual_path_zero_sequence():
    for kind in (
        TransformKind.stirling2(2, 3),
        TransformKind.stirling1(F(1, 2), -1),
        TransformKind.lah(-1, 2),
        TransformKind.binomial(3),
    ):
        assert ser.dual_path_check(kind, egf([0] * 6))
    for kind in (TransformKind.euler(2, -1), TransformKind.geomsum(5), TransformKind.logdivide()):
        assert ser.dual_path_check(kind, ogf([0] * 6))


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from(list(TransformName)),
    nonzero_rationals,
    nonzero_rationals,
    st.lists(st.integers(-20, 20), min_size=1, max_size=14),
)
def test_dual_path_property(name, lam, mu, seq):
    kind = TransformKind(name, lam, mu)
    a = ser.series_new(kind.flavor, len(seq) - 1, seq)
    assert ser.dual_path_check(kind, a)


def test_series_is_immutable():
    s = ser.exp_linear(1, 3)
    with pytest.raises(Exception):
        s.coeffs = ()
