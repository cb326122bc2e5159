"""Terminating hypergeometric machinery and the named families."""

from fractions import Fraction

import pytest

from weylharm.radial import RadialContext, g_poly_symmetric, omega_closed_form
from weylharm.scalars import GR_ONE, UniPoly
from weylharm.specfun import (
    InvalidParameterError,
    continuous_hahn_poly,
    gauss_contiguous_check,
    hyp2F1_terminating_poly,
    hyp2f1_3f2_connection_check,
    krawtchouk_meixner_check,
    meixner_pollaczek_poly,
    meixner_poly,
    pochhammer,
)

T = UniPoly.x()


class TestPochhammer:
    def test_empty(self):
        assert pochhammer(Fraction(7, 3), 0) == GR_ONE

    def test_recursive_step(self):
        base = Fraction(5, 2)
        for k in range(5):
            assert pochhammer(base, k + 1) == pochhammer(base, k) * (base + k)

    def test_poly_base(self):
        assert pochhammer(T, 3) == T * (T + 1) * (T + 2)


class TestGaussSeries:
    def test_k0(self):
        assert hyp2F1_terminating_poly(0, Fraction(3), Fraction(7)) == UniPoly(
            (GR_ONE,)
        )

    def test_k1_matches_omega1(self):
        # (d)_1 (1-q) [1 + t/(d(1-q))] = t + (1-q)d
        for d in (1, 2, 3):
            for q in (Fraction(0), Fraction(1, 4), Fraction(2, 3)):
                series = hyp2F1_terminating_poly(1, Fraction(d), 1 / (1 - q))
                assert series * (d * (1 - q)) == T + d * (1 - q)

    def test_chu_vandermonde_unit_argument(self):
        # 2F1(-t, -k, d; 1) = (d+t)_k / (d)_k
        for d in (1, 2, 4):
            for k in range(6):
                series = hyp2F1_terminating_poly(k, Fraction(d), Fraction(1))
                expected = pochhammer(T + d, k) / pochhammer(Fraction(d), k)
                assert series == expected

    def test_degree_is_k_for_nonzero_argument(self):
        p = hyp2F1_terminating_poly(5, Fraction(2), Fraction(3, 2))
        assert p.degree == 5
        assert not p.leading_coefficient().is_zero()

    def test_pole_rejected(self):
        with pytest.raises(InvalidParameterError):
            hyp2F1_terminating_poly(4, Fraction(-2), Fraction(1, 2))

    def test_matches_omega_closed_form(self):
        ctx = RadialContext(2, Fraction(1, 4))
        series = hyp2F1_terminating_poly(3, Fraction(2), Fraction(4, 3))
        assert series * (
            pochhammer(Fraction(2), 3) * Fraction(3, 4) ** 3
        ) == omega_closed_form(ctx, 3)


class TestContiguous:
    def test_grid(self):
        for k in range(1, 9):
            for c in (1, 2, 3, 4):
                assert gauss_contiguous_check(k, Fraction(c), Fraction(2))

    def test_unit_argument_boundary(self):
        for k in range(1, 6):
            assert gauss_contiguous_check(k, Fraction(3), Fraction(1))

    def test_negative_control(self):
        # same combination with one coefficient disturbed cannot vanish
        k, c, x = 3, Fraction(2), Fraction(2)
        f_k = hyp2F1_terminating_poly(k, c, x)
        f_next = hyp2F1_terminating_poly(k + 1, c, x)
        f_prev = hyp2F1_terminating_poly(k - 1, c, x)
        lhs = (T * (-x) + (-2 * k - c + k * x + 1)) * f_k
        lhs = lhs + f_next * (c + k) + f_prev * (-k * (x - 1))
        assert not lhs.is_zero()


class TestContinuousHahn:
    def test_k0(self):
        assert continuous_hahn_poly(0, 1, 1, 1, 1) == UniPoly((GR_ONE,))

    def test_k1_symmetric_parameters_d1(self):
        # with the symmetric parameter set at d = 1 the k = 1 element is
        # proportional to x and reproduces g_1 = lambda under x = lambda/4
        a = Fraction(1, 4)
        b = Fraction(3, 4)
        p1 = continuous_hahn_poly(1, a, b, a, b)
        scaled = p1.compose_linear(Fraction(1, 4), 0)
        factor = pochhammer(Fraction(1), 1) / (
            pochhammer(Fraction(1, 2), 1) * pochhammer(Fraction(1), 1)
        )
        assert scaled * factor == g_poly_symmetric(1, 1)

    def test_degree_and_leading(self):
        for k in range(6):
            p = continuous_hahn_poly(k, Fraction(1, 2), 1, Fraction(1, 2), 1)
            assert p.degree == k
            assert not p.leading_coefficient().is_zero()

    def test_identification_with_g(self):
        for d in (1, 2, 3, 4):
            a = Fraction(d, 4)
            b = a + Fraction(1, 2)
            for k in range(9):
                p = continuous_hahn_poly(k, a, b, a, b)
                factor = pochhammer(Fraction(d), k) / (
                    pochhammer(Fraction(d, 2), k)
                    * pochhammer(Fraction(d, 2) + Fraction(1, 2), k)
                )
                assert p.compose_linear(Fraction(1, 4), 0) * factor == (
                    g_poly_symmetric(d, k)
                )

    def test_real_for_symmetric_parameters(self):
        p = continuous_hahn_poly(4, Fraction(3, 4), Fraction(5, 4),
                                 Fraction(3, 4), Fraction(5, 4))
        assert all(c.is_real() for c in p.coeffs)


class TestMeixnerPollaczek:
    def test_n0(self):
        assert meixner_pollaczek_poly(0, Fraction(1, 2)) == UniPoly((GR_ONE,))

    def test_identification_with_g(self):
        for d in (1, 2, 3, 4):
            for k in range(9):
                mp = meixner_pollaczek_poly(k, Fraction(d, 2))
                factor = pochhammer(Fraction(d), k) / Fraction(
                    __import__("math").factorial(k)
                )
                assert mp.compose_linear(Fraction(1, 2), 0) * factor == (
                    g_poly_symmetric(d, k)
                )

    def test_connection_formula(self):
        for n in range(9):
            for a in (Fraction(1, 2), Fraction(1), Fraction(3, 4)):
                assert hyp2f1_3f2_connection_check(n, a)


class TestKrawtchoukMeixner:
    def test_trivial_k0(self):
        assert krawtchouk_meixner_check(0, Fraction(1, 2), 2)

    def test_grid(self):
        for k in range(9):
            for q in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
                for d in (1, 2, 3):
                    assert krawtchouk_meixner_check(k, q, d)

    def test_wrong_parameter_fails(self):
        q, d, k = Fraction(1, 4), 2, 3
        gauss = hyp2F1_terminating_poly(k, Fraction(d), 1 / (1 - q))
        wrong = meixner_poly(k, d, -q / (1 - q))
        assert gauss != wrong

    def test_degenerate_q_rejected(self):
        with pytest.raises(InvalidParameterError):
            krawtchouk_meixner_check(2, Fraction(0), 1)


def test_series_is_exact_sum_of_k_plus_one_terms():
    # structurally terminating: the (-k) upper factor zeroes everything
    # past term k, so adding more requested terms changes nothing
    from weylharm.specfun import terminating_series, minus_t_poly

    base = terminating_series(
        [minus_t_poly(), Fraction(-3)], [Fraction(2)], Fraction(5, 7), 4
    )
    longer = terminating_series(
        [minus_t_poly(), Fraction(-3)], [Fraction(2)], Fraction(5, 7), 9
    )
    assert base == longer
