"""Exact scalar arithmetic tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylharm.scalars import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussRational,
    UniPoly,
    format_gauss,
)


def gr(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


gauss_values = st.builds(
    GaussRational,
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)

small_polys = st.builds(
    UniPoly,
    st.lists(
        st.fractions(min_value=-4, max_value=4, max_denominator=4), max_size=5
    ),
)


class TestGaussRational:
    def test_modulus_product(self):
        assert (GR_ONE + GR_I) * (GR_ONE - GR_I) == gr(2)

    def test_additive_identity(self):
        x = gr(Fraction(-7, 3), Fraction(2, 5))
        assert x + GR_ZERO == x

    def test_half_plus_i_times_two_thirds(self):
        # independent hand computation over Q(i)
        assert gr(Fraction(1, 2), 1) * gr(Fraction(2, 3)) == gr(
            Fraction(1, 3), Fraction(2, 3)
        )

    def test_division_exact(self):
        x = gr(3, 4)
        assert x / x == GR_ONE
        assert (GR_ONE / GR_I) == -GR_I

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GR_ONE / GR_ZERO

    def test_conjugation_involution(self):
        x = gr(Fraction(5, 7), Fraction(-2, 3))
        assert x.conjugate().conjugate() == x
        assert x.norm_squared() == Fraction(25, 49) + Fraction(4, 9)

    @given(gauss_values, gauss_values, gauss_values)
    @settings(max_examples=60)
    def test_ring_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x

    @given(gauss_values)
    def test_field_inverse(self, x):
        if not x.is_zero():
            assert x * (GR_ONE / x) == GR_ONE

    def test_parse_format_round_trip(self):
        samples = ["0", "1", "-1", "i", "-i", "1/2", "-3/4", "1/2+2/3*i",
                   "1/2-2/3*i", "-1/2+i", "5*i"]
        for text in samples:
            z = GaussRational.parse(text)
            assert GaussRational.parse(format_gauss(z)) == z

    def test_parse_rejects_decimals(self):
        with pytest.raises(ValueError):
            GaussRational.parse("0.5")


class TestUniPoly:
    def test_compose_shift_square(self):
        p = UniPoly((0, 0, 1))  # t^2
        assert p.compose_shift(1) == UniPoly((1, 2, 1))

    def test_constants_shift_invariant(self):
        c = UniPoly.constant(Fraction(5, 3))
        assert c.compose_shift(Fraction(-7, 2)) == c

    def test_cube_shift(self):
        p = UniPoly((0, 0, 0, 1))
        assert p.compose_shift(-1) == UniPoly((-1, 3, -3, 1))

    def test_eval_at_i(self):
        p = UniPoly((1, 0, 1))  # t^2 + 1
        assert p(GR_I) == GR_ZERO

    def test_eval_zero_poly(self):
        assert UniPoly()(gr(17)) == GR_ZERO

    def test_eval_horner(self):
        p = UniPoly((2, 3, 1))  # t^2 + 3t + 2
        assert p(gr(2)) == gr(12)

    def test_degree_multiplicative(self):
        p = UniPoly((1, 2))
        q = UniPoly((0, 0, 3))
        assert (p * q).degree == p.degree + q.degree

    def test_canonical_trailing_zeros(self):
        assert UniPoly((1, 0, 0)) == UniPoly((1,))
        assert UniPoly((0, 0)).is_zero()

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=40)
    def test_ring_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(small_polys,
           st.fractions(min_value=-3, max_value=3, max_denominator=3))
    @settings(max_examples=40)
    def test_shift_round_trip(self, p, s):
        assert p.compose_shift(s).compose_shift(-s) == p

    def test_compose_linear(self):
        p = UniPoly((1, 1, 1))  # 1 + t + t^2
        half = Fraction(1, 2)
        assert p.compose_linear(half, 0)(gr(4)) == p(gr(2))

    def test_differences(self):
        p = UniPoly((0, 0, 1))
        assert p.forward_difference() == UniPoly((1, 2))
        assert p.backward_difference() == UniPoly((-1, 2))
