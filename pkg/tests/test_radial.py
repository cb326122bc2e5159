"""Radial tower: eta, omega routes, difference operators, certificates."""

import random
from fractions import Fraction

import pytest

from weylharm.ordering import cal_E, cal_L, cal_R, order_q
from weylharm.poly import CPolynomial, is_harmonic
from weylharm.radial import (
    NotRadialError,
    RadialContext,
    apply_Rq_univariate,
    check_difference_equation,
    check_fg_recurrence,
    decompose_weyl,
    difference_triple,
    eta,
    express_in_N,
    g_poly_symmetric,
    is_radial,
    nonorthogonality_certificate,
    omega,
    omega_by_raising,
    omega_closed_form,
    reassemble_weyl,
    three_term_coefficients,
    weyl_harmonics_check,
)
from weylharm.scalars import GR_ONE, GaussRational, UniPoly
from weylharm.verify import Q_GRID, random_weyl
from weylharm.weyl import WeylElement, number_operator, weyl_mul

T = UniPoly.x()


def poly_of_N(p: UniPoly, d: int) -> WeylElement:
    """Evaluate an exact polynomial at the number operator."""
    n = number_operator(d)
    acc = WeylElement.zero(d)
    for k in range(p.degree, -1, -1):
        acc = weyl_mul(acc, n) + WeylElement.unit(d).scale(p[k])
    return acc


class TestEta:
    def test_eta0(self):
        ctx = RadialContext(2, Fraction(1, 3))
        assert eta(ctx, 0) == WeylElement.unit(2)

    def test_eta1(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                expected = number_operator(d) + WeylElement.unit(d).scale(
                    d * (1 - q)
                )
                assert eta(ctx, 1) == expected

    def test_eta2_display(self):
        # (N + t0)^2 + (1-2q)(N + t0) + q t0, with t0 = d(1-q)
        for q in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
            for d in (1, 2):
                ctx = RadialContext(d, q)
                t0 = ctx.t0
                shifted = number_operator(d) + WeylElement.unit(d).scale(t0)
                expected = (
                    weyl_mul(shifted, shifted)
                    + shifted.scale(1 - 2 * q)
                    + WeylElement.unit(d).scale(q * t0)
                )
                assert eta(ctx, 2) == expected


class TestExpressInN:
    def test_unit(self):
        assert express_in_N(WeylElement.unit(3)) == UniPoly((GR_ONE,))

    def test_powers_identity(self):
        n = number_operator(2)
        assert express_in_N(weyl_mul(n, n)) == T**2

    def test_matches_omega(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                for k in range(7):
                    assert express_in_N(eta(ctx, k)) == omega(ctx, k)

    def test_not_radial(self):
        w = WeylElement.creator(1, 1)
        with pytest.raises(NotRadialError):
            express_in_N(w)
        assert not is_radial(w)
        # diagonal total degree but unequal cross-mode weights
        bad = WeylElement.monomial(2, (1, 0), (1, 0))
        assert not is_radial(bad)

    def test_round_trip_through_N(self):
        rng = random.Random(0)
        for d in (1, 2):
            coeffs = [GaussRational(Fraction(rng.randint(-3, 3), 2)) for _ in range(5)]
            p = UniPoly(coeffs)
            assert express_in_N(poly_of_N(p, d)) == p


class TestUnivariateRaising:
    def test_collapse_q0(self):
        ctx = RadialContext(1, Fraction(0))
        assert apply_Rq_univariate(ctx, UniPoly((GR_ONE,))) == T + 1

    def test_collapse_q1(self):
        for d in (1, 2, 3):
            ctx = RadialContext(d, Fraction(1))
            assert apply_Rq_univariate(ctx, UniPoly((GR_ONE,))) == T

    def test_general_constant(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                assert apply_Rq_univariate(ctx, UniPoly((GR_ONE,))) == T + d * (1 - q)

    def test_degree_raises_by_one(self):
        rng = random.Random(1)
        ctx = RadialContext(2, Fraction(1, 3))
        p = UniPoly([Fraction(rng.randint(-3, 3)) for _ in range(4)] + [1])
        assert apply_Rq_univariate(ctx, p).degree == p.degree + 1


class TestOmegaRoutes:
    def test_omega1(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                assert omega(RadialContext(d, q), 1) == T + d * (1 - q)

    def test_q0_rising_factorials(self):
        ctx = RadialContext(2, Fraction(0))
        for k in range(6):
            expected = UniPoly((GR_ONE,))
            for i in range(k):
                expected = expected * (T + 2 + i)
            assert omega(ctx, k) == expected
            assert omega_by_raising(ctx, k) == expected

    def test_q1_falling_factorials(self):
        ctx = RadialContext(3, Fraction(1))
        for k in range(6):
            expected = UniPoly((GR_ONE,))
            for i in range(k):
                expected = expected * (T - i)
            assert omega(ctx, k) == expected
            assert omega_closed_form(ctx, k) == expected

    def test_all_routes_agree(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                for k in range(13):
                    w = omega(ctx, k)
                    assert omega_by_raising(ctx, k) == w
                    assert omega_closed_form(ctx, k) == w

    def test_chu_vandermonde_case(self):
        # q = 0, d = 1, k = 2: unit-argument Gauss series collapses
        ctx = RadialContext(1, Fraction(0))
        assert omega_closed_form(ctx, 2) == T**2 + T * 3 + 2


class TestDifferenceTriple:
    def test_lowering_kills_constants(self):
        ctx = RadialContext(2, Fraction(1, 3))
        _, low, _ = difference_triple(ctx, UniPoly((GaussRational(5),)))
        assert low.is_zero()

    def test_weight_relations(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                for k in range(1, 11):
                    wk = omega(ctx, k)
                    raise_, lower, grade = difference_triple(ctx, wk)
                    assert raise_ == omega(ctx, k + 1)
                    assert lower == omega(ctx, k - 1) * (k * (k + d - 1))
                    assert grade == wk * (2 * k + d)

    def test_raising_matches_operator_form(self):
        # the explicit-shift and difference-operator forms are one map
        rng = random.Random(2)
        for q in (Fraction(0), Fraction(2, 7), Fraction(1)):
            ctx = RadialContext(3, q)
            for _ in range(6):
                p = UniPoly([Fraction(rng.randint(-4, 4), 3) for _ in range(5)])
                raise_, _, _ = difference_triple(ctx, p)
                assert raise_ == apply_Rq_univariate(ctx, p)

    def test_grading_consistency_with_difference_equation(self):
        # grade = 2[q t backward + (1-q)(t+d) forward] + d, so the
        # difference equation is the grading eigenvalue relation
        for q in (Fraction(1, 4), Fraction(3, 4)):
            ctx = RadialContext(2, q)
            for k in range(8):
                wk = omega(ctx, k)
                _, _, grade = difference_triple(ctx, wk)
                assert grade == wk * (2 * k + ctx.d)
                assert check_difference_equation(ctx, k)


class TestDifferenceEquation:
    def test_k0(self):
        assert check_difference_equation(RadialContext(1, Fraction(1, 2)), 0)

    def test_grid(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                for k in range(11):
                    assert check_difference_equation(ctx, k)

    def test_negative_control(self):
        # perturbing omega_k must break the identity
        ctx = RadialContext(2, Fraction(1, 3))
        k = 4
        w = omega(ctx, k) + T**k
        lhs = T * w.backward_difference() * ctx.q + (T + ctx.d) * (
            w.forward_difference()
        ) * (1 - ctx.q)
        assert lhs != w * k


class TestSymmetricFamily:
    def test_g1(self):
        assert g_poly_symmetric(3, 1) == T

    def test_g2(self):
        for d in (1, 2, 3):
            assert g_poly_symmetric(d, 2) == (T**2 - d) / Fraction(2)

    def test_parity(self):
        for d in (1, 2, 3):
            for k in range(9):
                g = g_poly_symmetric(d, k)
                flipped = g.compose_linear(-1, 0)
                assert flipped == (g if k % 2 == 0 else -g)

    def test_real_coefficients(self):
        for d in (1, 4):
            for k in range(9):
                assert all(c.is_real() for c in g_poly_symmetric(d, k).coeffs)


class TestRenormalizedRecurrence:
    def test_grid(self):
        for q in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(2, 5)):
            for d in (1, 2, 3):
                assert check_fg_recurrence(RadialContext(d, q), 10)

    def test_rejects_degenerate_q(self):
        with pytest.raises(ValueError):
            check_fg_recurrence(RadialContext(1, Fraction(0)), 3)

    def test_equivalent_to_three_term_recurrence(self):
        # the pulled-back identity is the recurrence in disguise: check
        # that it reproduces the omega recurrence step exactly
        q, d = Fraction(1, 3), 2
        ctx = RadialContext(d, q)
        for k in range(6):
            nxt = (T + ctx.t0 - (2 * q - 1) * (k + 1)) * omega(ctx, k + 1) + omega(
                ctx, k
            ) * (q * (1 - q) * (k + 1) * (k + d))
            assert nxt == omega(ctx, k + 2)


class TestCertificate:
    def test_boundary_q0(self):
        assert nonorthogonality_certificate(
            RadialContext(2, Fraction(0)), 3
        ) == GaussRational(0)

    def test_half_d1_k1(self):
        cert = nonorthogonality_certificate(RadialContext(1, Fraction(1, 2)), 1)
        assert cert == GaussRational(Fraction(-1, 4))

    def test_grid_sign_and_value(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                for k in range(1, 11):
                    cert = nonorthogonality_certificate(ctx, k)
                    assert cert == GaussRational(-q * (1 - q) * k * (k + d - 1))
                    assert cert.is_real() and Fraction(cert.re) <= 0

    def test_extraction_structure(self):
        ctx = RadialContext(3, Fraction(2, 5))
        a, b, c = three_term_coefficients(ctx, 4)
        assert a == GaussRational(1)
        assert b == GaussRational(ctx.t0 - (2 * ctx.q - 1) * 4)
        assert c == GaussRational(-ctx.q * (1 - ctx.q) * 4 * (4 + 2))


class TestPullThrough:
    def test_random_polynomials(self):
        rng = random.Random(3)
        for d in (1, 2):
            n = number_operator(d)
            for _ in range(6):
                p = UniPoly([Fraction(rng.randint(-3, 3), 2) for _ in range(4)])
                pn = poly_of_N(p, d)
                pn_up = poly_of_N(p.compose_shift(1), d)
                pn_down = poly_of_N(p.compose_shift(-1), d)
                for j in range(1, d + 1):
                    a = WeylElement.annihilator(d, j)
                    c = WeylElement.creator(d, j)
                    assert weyl_mul(a, pn) == weyl_mul(pn_up, a)
                    assert weyl_mul(c, pn) == weyl_mul(pn_down, c)


class TestWeylWeightBasis:
    def test_full_weyl_action(self):
        for q in Q_GRID:
            for d in (1, 2, 3):
                ctx = RadialContext(d, q)
                octx = ctx.ordering
                for k in range(6):
                    ek = eta(ctx, k)
                    assert cal_R(octx, ek) == eta(ctx, k + 1)
                    assert cal_E(octx, ek) == ek.scale(2 * k + d)
                    lowered = cal_L(octx, ek)
                    if k == 0:
                        assert lowered.is_zero()
                    else:
                        assert lowered == eta(ctx, k - 1).scale(k * (k + d - 1))


class TestWeylHarmonics:
    def test_unit_is_harmonic(self):
        ctx = RadialContext(2, Fraction(1, 4))
        assert weyl_harmonics_check(ctx, WeylElement.unit(2))

    def test_ordered_harmonic_polynomials(self):
        p = CPolynomial.z(1, 1) ** 2  # z^2 is harmonic
        for q in Q_GRID:
            ctx = RadialContext(1, q)
            assert weyl_harmonics_check(ctx, order_q(ctx.ordering, p))

    def test_number_operator_is_not(self):
        ctx = RadialContext(1, Fraction(1, 2))
        assert not weyl_harmonics_check(ctx, number_operator(1))

    def test_decompose_round_trip(self):
        rng = random.Random(4)
        for q in Q_GRID:
            for d in (1, 2):
                ctx = RadialContext(d, q)
                for _ in range(4):
                    w = random_weyl(rng, d, 5)
                    parts = decompose_weyl(ctx, w)
                    assert all(is_harmonic(h) for _, h in parts)
                    assert reassemble_weyl(ctx, parts) == w
