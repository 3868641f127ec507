from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from stirconv import kernel
from stirconv.kernel import (
    Polynomial,
    TriangleCache,
    TriangleKind,
    bell,
    binom_gen,
    binom_int,
    exp_poly,
    exp_poly_eval,
    lah,
    laguerre,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)
from stirconv import series as ser

from brute import cycle_counts, ordered_list_counts, partition_counts, set_partitions


@pytest.mark.parametrize("n,k,expected", [(0, 0, 1), (3, 2, 3), (2, 5, 0)])
def test_stirling2_examples(n, k, expected):
    assert stirling2(n, k) == expected


def test_stirling2_example_from_gf():
    # coefficient of x^3/3! in (e^x - 1)^2 / 2!
    assert ser.kernel_gf(ser.GFKind.STIRLING2, 2, 5).terms()[3] == 3 == stirling2(3, 2)


@pytest.mark.parametrize("n,k,expected", [(3, 2, -3), (4, 3, -6), (5, 5, 1)])
def test_stirling1_signed_examples(n, k, expected):
    assert stirling1_signed(n, k) == expected


def test_stirling1_signed_examples_from_gf():
    terms3 = ser.kernel_gf(ser.GFKind.STIRLING1, 2, 6).terms()
    terms4 = ser.kernel_gf(ser.GFKind.STIRLING1, 3, 6).terms()
    assert terms3[3] == -3
    assert terms4[4] == -6


@pytest.mark.parametrize("n,k,expected", [(3, 2, 3), (0, 0, 1), (4, 1, 6)])
def test_stirling1_unsigned_examples(n, k, expected):
    assert stirling1_unsigned(n, k) == expected


def test_lah_examples():
    assert lah(4, 1) == 24
    assert lah(0, 0) == 1
    assert lah(2, 1) == 2
    assert lah(3, 5) == 0
    assert all(lah(n, 0) == 0 for n in range(1, 10))


@pytest.mark.parametrize("n", range(0, 8))
def test_triangles_match_brute_force(n):
    assert tuple(stirling2(n, k) for k in range(n + 1)) == partition_counts(n)
    assert tuple(stirling1_unsigned(n, k) for k in range(n + 1)) == cycle_counts(n)
    assert tuple(lah(n, k) for k in range(n + 1)) == ordered_list_counts(n)
    assert bell(n) == sum(1 for _ in set_partitions(n))


def test_triangle_row_shape_and_diagonals():
    for kind in TriangleKind:
        tri = kernel.triangle(kind)
        for n in range(15):
            assert len(tri.row(n)) == n + 1
            assert tri(n, n) == 1
            if n:
                assert tri(n, 0) == 0
    assert all(lah(n, 1) == kernel.factorial(n) for n in range(1, 15))


def test_unsigned_is_signed_up_to_sign():
    for n in range(41):
        for k in range(n + 1):
            c = stirling1_unsigned(n, k)
            assert c >= 0
            assert c == (-1) ** (n - k) * stirling1_signed(n, k) == abs(stirling1_signed(n, k))


def test_bell_is_row_sum():
    for n in range(41):
        assert sum(stirling2(n, k) for k in range(n + 1)) == bell(n)


def test_lah_from_stirling_product():
    for n in range(31):
        for k in range(n + 1):
            assert lah(n, k) == sum(stirling1_unsigned(n, j) * stirling2(j, k) for j in range(n + 1))


def test_binom_int():
    assert binom_int(4, 2) == 6
    assert binom_int(9, 0) == 1
    assert binom_int(2, 3) == 0
    with pytest.raises(ValueError):
        binom_int(-1, 0)


def test_binom_gen_examples():
    assert binom_gen(F(1, 2), 2) == F(-1, 8)
    assert binom_gen(F(7, 3), 0) == 1
    assert binom_gen(3, 5) == 0
    assert binom_gen(-1, 3) == -1


def test_binom_gen_matches_binom_int():
    for m in range(31):
        for n in range(31):
            assert binom_gen(m, n) == binom_int(m, n)
            assert binom_gen(F(m), n) == binom_int(m, n)


@given(st.fractions(max_denominator=12).filter(lambda x: abs(x) < 20), st.integers(0, 12))
def test_binom_gen_pascal(x, n):
    assert binom_gen(x + 1, n + 1) == binom_gen(x, n + 1) + binom_gen(x, n)


def test_bell_examples():
    assert [bell(n) for n in range(5)] == [1, 1, 2, 5, 15]


def test_exp_poly():
    assert exp_poly(0) == Polynomial((F(1),))
    assert exp_poly(2).coeffs == (0, 1, 1)
    assert exp_poly(3).coeffs == (0, 1, 3, 1)
    assert exp_poly(5).degree == 5


def test_exp_poly_eval():
    assert exp_poly_eval(4, 1) == 15 == bell(4)
    assert exp_poly_eval(0, F(5, 7)) == 1
    assert exp_poly_eval(2, F(1, 2)) == F(3, 4)
    x = F(-2, 3)
    assert exp_poly_eval(6, x) == exp_poly(6)(x)


def test_polynomial_normalizes():
    assert Polynomial((F(1), F(0), F(0))).coeffs == (1,)
    assert Polynomial(()).degree == -1
    assert Polynomial((0, 0)).degree == -1


def test_laguerre_examples():
    assert laguerre(0, 3, F(9, 2)) == 1
    assert laguerre(1, 0, -1) == 2
    assert laguerre(2, -1, -1) == F(3, 2)


def test_laguerre_rejects_low_order():
    with pytest.raises(ValueError):
        laguerre(2, -2, 1)


@pytest.mark.parametrize("q", [-1, 0, 1, 2, 3])
@pytest.mark.parametrize("x", [F(-1), F(-1, 2), F(2)])
def test_laguerre_matches_generating_function(q, x):
    N = 20
    # (1-t)^(-q-1) exp(-x t / (1-t))
    prefactor = ser.series_pow(ser.geometric(1, N), q + 1)
    gf = ser.series_mul(prefactor, ser.series_exp((ser.geometric(1, N) - 1) * (-x)))
    for n in range(N + 1):
        assert laguerre(n, q, x) == gf[n]


def test_frozen_triangle():
    tri = TriangleCache(TriangleKind.STIRLING2, [(1,), (0, 1)])
    assert tri(1, 1) == 1
    assert tri(0, 3) == 0
    with pytest.raises(IndexError):
        tri(2, 1)
    with pytest.raises(ValueError):
        TriangleCache(TriangleKind.LAH, [(1,), (0,)])


def test_override_triangle_restores():
    rows = [(1,), (0, 1), (0, 99, 1)]
    with kernel.override_triangle(TriangleKind.STIRLING2, rows):
        assert stirling2(2, 1) == 99
        assert exp_poly_eval(2, 1) == 100
    assert stirling2(2, 1) == 1
    assert exp_poly_eval(2, 1) == 2


def test_concurrent_growth_is_consistent():
    from concurrent.futures import ThreadPoolExecutor

    tri = TriangleCache(TriangleKind.STIRLING_SIGNED)
    with ThreadPoolExecutor(8) as pool:
        rows = list(pool.map(tri.row, [60, 10, 45, 60, 3, 59] * 4))
    assert tri.row(60) == kernel.triangle(TriangleKind.STIRLING_SIGNED).row(60)
    assert rows[0] == rows[3]
