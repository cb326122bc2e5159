"""The q-ordering isomorphism between the polynomial and Weyl algebras.

For an exact rational parameter q, each coordinate acts on the Weyl
algebra through the convex mix of left and right multiplication

    M_j  w = (1-q) a_j w  + q w a_j
    M+_j w = q a_j+ w     + (1-q) w a_j+

and the ordering map sends z^alpha zbar^beta to M^alpha M+^beta applied
to the unit.  q = 0 gives Wick order (annihilators multiplied on the
left, creators on the right), q = 1 the reverse, q = 1/2 the symmetric
(Weyl) order.  The inverse is computed by triangular peeling: the top
degree part of the image of a monomial is that monomial itself.

The transferred sl2 triple (`cal_R`, `cal_L`, `cal_E`) makes the ordering
map an intertwiner for the classical triple on polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .poly import CMonomial, CPolynomial
from .weyl import ModeMismatchError, WeylElement, commutator, weyl_mul


@dataclass(frozen=True)
class OrderingContext:
    """Mode count and exact ordering parameter.

    q may be any rational; values outside [0, 1] are accepted but the
    standard verification grids only sample inside.
    """

    d: int
    q: Fraction

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("mode count d must be >= 1")
        object.__setattr__(self, "q", Fraction(self.q))

    @property
    def q_complement(self) -> Fraction:
        return 1 - self.q


def _gen_pair(ctx: OrderingContext, j: int):
    return (
        WeylElement.annihilator(ctx.d, j),
        WeylElement.creator(ctx.d, j),
    )


def apply_M(ctx: OrderingContext, j: int, w: WeylElement) -> WeylElement:
    """(1-q) a_j w + q w a_j."""
    _check_w(ctx, w)
    a, _ = _gen_pair(ctx, j)
    return weyl_mul(a, w).scale(ctx.q_complement) + weyl_mul(w, a).scale(ctx.q)


def apply_Mplus(ctx: OrderingContext, j: int, w: WeylElement) -> WeylElement:
    """q a_j+ w + (1-q) w a_j+."""
    _check_w(ctx, w)
    _, c = _gen_pair(ctx, j)
    return weyl_mul(c, w).scale(ctx.q) + weyl_mul(w, c).scale(ctx.q_complement)


_monomial_cache: dict = {}


def ordered_monomial(ctx: OrderingContext, alpha: tuple, beta: tuple) -> WeylElement:
    """Image of z^alpha zbar^beta under the ordering map."""
    key = (ctx.d, ctx.q, alpha, beta)
    hit = _monomial_cache.get(key)
    if hit is not None:
        return hit
    w = WeylElement.unit(ctx.d)
    for j in range(ctx.d):
        for _ in range(beta[j]):
            w = apply_Mplus(ctx, j + 1, w)
    for j in range(ctx.d):
        for _ in range(alpha[j]):
            w = apply_M(ctx, j + 1, w)
    _monomial_cache[key] = w
    return w


def order_q(ctx: OrderingContext, p: CPolynomial) -> WeylElement:
    """The ordering map, linear over Q(i)."""
    if p.d != ctx.d:
        raise ModeMismatchError(f"polynomial has d={p.d}, context d={ctx.d}")
    out = WeylElement.zero(ctx.d)
    for mono, coeff in p.terms.items():
        out = out + ordered_monomial(ctx, mono.alpha, mono.beta).scale(coeff)
    return out


def b_element(ctx: OrderingContext, l: int, j: int, k: int) -> WeylElement:
    """Normal form of sum_s C(k,s) q^(k-s) (1-q)^s a_l^s (a_l+)^j a_l^(k-s).

    This is the single-mode building block of the factorized ordering map:
    the image of a degree-(j, k) monomial in mode l with j counting
    creations and k annihilations.  The image of z^alpha zbar^beta
    factorizes as the product over modes of b_element(l, beta_l, alpha_l).
    """
    if j < 0 or k < 0:
        raise ValueError("exponents must be nonnegative")
    if not 1 <= l <= ctx.d:
        raise IndexError(f"mode index {l} out of range 1..{ctx.d}")
    d = ctx.d
    e = tuple(1 if i == l - 1 else 0 for i in range(d))
    zero = (0,) * d
    q, qc = ctx.q, ctx.q_complement
    out = WeylElement.zero(d)
    creation = WeylElement.monomial(d, tuple(j * x for x in e), zero)
    for s in range(k + 1):
        left = WeylElement.monomial(d, zero, tuple(s * x for x in e))
        right = WeylElement.monomial(d, zero, tuple((k - s) * x for x in e))
        word = weyl_mul(weyl_mul(left, creation), right)
        out = out + word.scale(comb(k, s) * q ** (k - s) * qc**s)
    return out


def unorder_q(ctx: OrderingContext, w: WeylElement) -> CPolynomial:
    """Inverse of the ordering map.

    The image of z^alpha zbar^beta has top part exactly the normal
    monomial with creations beta and annihilations alpha (coefficient 1;
    commutator corrections all drop degree), so matching and subtracting
    top terms strictly decreases degree and terminates.
    """
    _check_w(ctx, w)
    out = CPolynomial.zero(ctx.d)
    residual = w
    while not residual.is_zero():
        deg = residual.degree()
        top = CPolynomial(
            ctx.d,
            {
                CMonomial(m.alpha, m.beta): c
                for m, c in residual.terms.items()
                if m.degree == deg
            },
        )
        out = out + top
        residual = residual - order_q(ctx, top)
        if not residual.is_zero() and residual.degree() >= deg:
            raise AssertionError("triangular inversion failed to reduce degree")
    return out


# ---------------------------------------------------------------------------
# Transferred sl2 triple
# ---------------------------------------------------------------------------


def cal_R(ctx: OrderingContext, w: WeylElement) -> WeylElement:
    """(1-q)^2 sum a_j w a_j+  +  q(1-q) sum (w a_j+ a_j + a_j a_j+ w)
    +  q^2 sum a_j+ w a_j."""
    _check_w(ctx, w)
    q, qc = ctx.q, ctx.q_complement
    out = WeylElement.zero(ctx.d)
    for j in range(1, ctx.d + 1):
        a, c = _gen_pair(ctx, j)
        out = out + weyl_mul(weyl_mul(a, w), c).scale(qc * qc)
        out = out + (
            weyl_mul(w, weyl_mul(c, a)) + weyl_mul(weyl_mul(a, c), w)
        ).scale(q * qc)
        out = out + weyl_mul(weyl_mul(c, w), a).scale(q * q)
    return out


def cal_L(ctx: OrderingContext, w: WeylElement) -> WeylElement:
    """- sum_j [a_j, [a_j+, w]]; independent of q."""
    _check_w(ctx, w)
    out = WeylElement.zero(ctx.d)
    for j in range(1, ctx.d + 1):
        a, c = _gen_pair(ctx, j)
        out = out - commutator(a, commutator(c, w))
    return out


def cal_E(ctx: OrderingContext, w: WeylElement) -> WeylElement:
    """The transferred symmetrized Euler operator."""
    _check_w(ctx, w)
    q, qc = ctx.q, ctx.q_complement
    out = w.scale(ctx.d)
    for j in range(1, ctx.d + 1):
        a, c = _gen_pair(ctx, j)
        bracket_c = commutator(c, w)
        bracket_a = commutator(a, w)
        out = out - (
            weyl_mul(a, bracket_c) - weyl_mul(bracket_a, c)
        ).scale(qc)
        out = out - (
            weyl_mul(bracket_c, a) - weyl_mul(c, bracket_a)
        ).scale(q)
    return out


def _check_w(ctx: OrderingContext, w: WeylElement):
    if w.d != ctx.d:
        raise ModeMismatchError(f"element has d={w.d}, context d={ctx.d}")
