"""Radial elements of the Weyl algebra: polynomials of the number operator.

Iterating the transferred raising operator on the unit produces the
natural radial basis eta_k; each eta_k is a polynomial omega_k of the
number operator.  This module computes the omega_k along four independent
routes (full Weyl iteration, univariate raising recurrence, three-term
recurrence, terminating-hypergeometric closed form), the induced
difference-operator triple, the renormalized real family g_k used at
q = 1/2, and the exact certificates attached to them.

Quantities involving the irrational scale alpha = (q(1-q))^(-1/2) are
never materialized: identities containing alpha are verified after
pulling them back to Q with alpha^2 = 1/(q(1-q)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ordering import OrderingContext, cal_L, cal_R, order_q, unorder_q
from .poly import harmonic_decompose
from .scalars import GR_ONE, GaussRational, UniPoly
from .specfun import hyp2F1_terminating_poly
from .weyl import NormalMonomial, WeylElement, weyl_mul


class NotRadialError(ValueError):
    """Raised when an element is not a polynomial of the number operator."""


@dataclass(frozen=True)
class RadialContext:
    """Mode count and ordering parameter with the derived rational data.

    ``t0`` = d(1-q) is the constant offset appearing throughout the radial
    theory; ``alpha_squared`` and ``s0_squared_times_minus4`` keep the
    lambda-substitution bookkeeping rational (both exist only for q not in
    {0, 1}).
    """

    d: int
    q: Fraction

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("mode count d must be >= 1")
        object.__setattr__(self, "q", Fraction(self.q))

    @property
    def t0(self) -> Fraction:
        return self.d * (1 - self.q)

    @property
    def alpha_squared(self) -> Fraction:
        """1 / (q(1-q)); the squared lambda-substitution scale."""
        if self.q in (0, 1):
            raise ValueError("alpha is undefined for q in {0, 1}")
        return 1 / (self.q * (1 - self.q))

    @property
    def s0_squared_times_minus4(self) -> Fraction:
        """-4 s0^2 = (1-2q)^2 / (q(1-q)), a nonnegative rational."""
        return (1 - 2 * self.q) ** 2 * self.alpha_squared

    @property
    def ordering(self) -> OrderingContext:
        return OrderingContext(self.d, self.q)


# ---------------------------------------------------------------------------
# eta_k and the number-operator representation
# ---------------------------------------------------------------------------

_eta_cache: dict = {}
_n_power_cache: dict = {}


def eta(ctx: RadialContext, k: int) -> WeylElement:
    """The k-th iterate of the raising operator on the unit."""
    if k < 0:
        raise ValueError("k must be >= 0")
    key = (ctx.d, ctx.q)
    chain = _eta_cache.setdefault(key, [WeylElement.unit(ctx.d)])
    octx = ctx.ordering
    while len(chain) <= k:
        chain.append(cal_R(octx, chain[-1]))
    return chain[k]


def _number_power(d: int, m: int) -> WeylElement:
    from .weyl import number_operator

    chain = _n_power_cache.setdefault(d, [WeylElement.unit(d), number_operator(d)])
    while len(chain) <= m:
        chain.append(weyl_mul(chain[-1], chain[1]))
    return chain[m]


def express_in_N(w: WeylElement) -> UniPoly:
    """Write w as a polynomial of the number operator, exactly.

    Peels by total degree: the degree-2m part of p(N) comes only from the
    N^m term, whose coefficient can be read off the normal monomial with
    all m quanta in the first mode.  Raises NotRadialError when the
    subtraction fails to exhaust a level.
    """
    d = w.d
    out = UniPoly()
    residual = w
    while not residual.is_zero():
        deg = residual.degree()
        if deg % 2:
            raise NotRadialError("odd total degree cannot come from C[N]")
        m = deg // 2
        lead_mode = tuple(m if i == 0 else 0 for i in range(d))
        c = residual.terms.get(NormalMonomial(lead_mode, lead_mode))
        if c is None:
            raise NotRadialError("missing diagonal leading monomial")
        out = out + UniPoly([0] * m + [1]) * c
        residual = residual - _number_power(d, m).scale(c)
        if not residual.is_zero() and residual.degree() >= deg:
            raise NotRadialError("element is not a polynomial of N")
    return out


def is_radial(w: WeylElement) -> bool:
    try:
        express_in_N(w)
        return True
    except NotRadialError:
        return False


# ---------------------------------------------------------------------------
# omega_k: univariate raising, recurrence, closed form
# ---------------------------------------------------------------------------


def apply_Rq_univariate(ctx: RadialContext, p: UniPoly) -> UniPoly:
    """The raising operator transported to polynomials of one variable:

        q(1-q)(2t + d) p(t) + (1-q)^2 (t + d) p(t+1) + q^2 t p(t-1).

    Raises polynomial degree by exactly one.
    """
    q = ctx.q
    qc = 1 - q
    t = UniPoly.x()
    out = (t * 2 + ctx.d) * p * (q * qc)
    out = out + (t + ctx.d) * p.compose_shift(1) * (qc * qc)
    out = out + t * p.compose_shift(-1) * (q * q)
    return out


def omega_by_raising(ctx: RadialContext, k: int) -> UniPoly:
    """omega_k computed by iterating the univariate raising operator."""
    p = UniPoly((GR_ONE,))
    for _ in range(k):
        p = apply_Rq_univariate(ctx, p)
    return p


_omega_cache: dict = {}


def omega(ctx: RadialContext, k: int) -> UniPoly:
    """omega_k from the three-term recurrence

        omega_{k+1} = [t + (1-q)d - (2q-1)k] omega_k
                      + q(1-q) k (k+d-1) omega_{k-1},

    with omega_0 = 1 (and omega_{-1} = 0)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    key = (ctx.d, ctx.q)
    chain = _omega_cache.setdefault(key, [UniPoly((GR_ONE,))])
    q = ctx.q
    t = UniPoly.x()
    while len(chain) <= k:
        n = len(chain) - 1
        prev = chain[n - 1] if n >= 1 else UniPoly()
        linear = t + (1 - q) * ctx.d - (2 * q - 1) * n
        nxt = linear * chain[n] + prev * (q * (1 - q) * n * (n + ctx.d - 1))
        chain.append(nxt)
    return chain[k]


def omega_closed_form(ctx: RadialContext, k: int) -> UniPoly:
    """Terminating-hypergeometric closed form of omega_k.

    For q != 1 this is (d)_k (1-q)^k * 2F1(-t, -k, d; 1/(1-q)) expanded as
    an exact polynomial in t; at q = 1 the limit form is the falling
    factorial t(t-1)...(t-k+1).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if ctx.q == 1:
        t = UniPoly.x()
        out = UniPoly((GR_ONE,))
        for m in range(k):
            out = out * (t - m)
        return out
    qc = 1 - ctx.q
    poch = Fraction(1)
    for i in range(k):
        poch *= ctx.d + i
    series = hyp2F1_terminating_poly(k, Fraction(ctx.d), 1 / qc)
    return series * (poch * qc**k)


# ---------------------------------------------------------------------------
# Difference-operator triple and certificates
# ---------------------------------------------------------------------------


def difference_triple(ctx: RadialContext, p: UniPoly) -> tuple:
    """The sl2 triple as difference operators on polynomials of t.

    Returns (raising, lowering, grading) applied to p:

        R~ p = (1-q)^2 (t+d) Dp - q^2 t Np + (t + d(1-q)) p
        L~ p = (t+d) Dp - t Np
        E~ p = 2(1-q)(t+d) Dp + 2q t Np + d p

    with D and N the forward and backward difference operators.
    """
    q = ctx.q
    qc = 1 - q
    t = UniPoly.x()
    fwd = p.forward_difference()
    bwd = p.backward_difference()
    td = t + ctx.d
    raising = td * fwd * (qc * qc) - t * bwd * (q * q) + (t + ctx.t0) * p
    lowering = td * fwd - t * bwd
    grading = td * fwd * (2 * qc) + t * bwd * (2 * q) + p * ctx.d
    return raising, lowering, grading


def check_difference_equation(ctx: RadialContext, k: int) -> bool:
    """Exact check of q t N(omega_k) + (1-q)(t+d) D(omega_k) = k omega_k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    w = omega(ctx, k)
    t = UniPoly.x()
    lhs = t * w.backward_difference() * ctx.q + (t + ctx.d) * w.forward_difference() * (
        1 - ctx.q
    )
    return lhs == w * k


def three_term_coefficients(ctx: RadialContext, k: int) -> tuple:
    """Extract (A_k, B_k, C_k) with omega_{k+1} = (A_k t + B_k) omega_k - C_k omega_{k-1}.

    The omegas are produced by the univariate raising iteration, so the
    extraction is an independent measurement of the recurrence structure.
    Raises if the three-term form does not hold exactly.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    w_prev = omega_by_raising(ctx, k - 1)
    w_k = omega_by_raising(ctx, k)
    w_next = omega_by_raising(ctx, k + 1)
    t = UniPoly.x()
    a = w_next.leading_coefficient() / w_k.leading_coefficient()
    r = w_next - t * w_k * a
    b = r[k] / w_k[k]
    s = r - w_k * b
    c = -(s[k - 1] / w_prev[k - 1]) if not s.is_zero() else GaussRational(0)
    if s + w_prev * c != UniPoly():
        raise AssertionError("omega_k do not satisfy a three-term recurrence")
    return a, b, c


def nonorthogonality_certificate(ctx: RadialContext, k: int) -> GaussRational:
    """The product A_{k-1} A_k C_k extracted from the computed recurrence.

    A nonpositive value violates the positivity condition a three-term
    family must satisfy to be orthogonal with respect to a positive
    measure; the value here is exactly -q(1-q) k (k+d-1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a_k, _, c_k = three_term_coefficients(ctx, k)
    if k == 1:
        w0 = omega_by_raising(ctx, 0)
        w1 = omega_by_raising(ctx, 1)
        a_prev = w1.leading_coefficient() / w0.leading_coefficient()
    else:
        a_prev, _, _ = three_term_coefficients(ctx, k - 1)
    return a_prev * a_k * c_k


# ---------------------------------------------------------------------------
# The renormalized symmetric family g_k
# ---------------------------------------------------------------------------

_g_cache: dict = {}


def g_poly_symmetric(d: int, k: int) -> UniPoly:
    """The real renormalized radial polynomials at q = 1/2:

        g_0 = 1,  g_1 = lambda,  (k+2) g_{k+2} = lambda g_{k+1} - (k+d) g_k.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    chain = _g_cache.setdefault(d, [UniPoly((GR_ONE,)), UniPoly.x()])
    lam = UniPoly.x()
    while len(chain) <= k:
        n = len(chain) - 2  # recurrence index: computing g_{n+2}
        nxt = (lam * chain[n + 1] - chain[n] * (n + d)) / Fraction(n + 2)
        chain.append(nxt)
    return chain[k]


def check_fg_recurrence(ctx: RadialContext, k_max: int) -> bool:
    """Pulled-back exact check of the renormalized recurrence

        (k+2) g_{k+2} + (k+d) g_k + [-lambda + 2 s0 (k+1)] g_{k+1} = 0.

    Substituting g_k = (i^k alpha^k / k!) omega_k(t) and
    lambda = i alpha (t + t0), then dividing by i^k alpha^k / k!, leaves a
    polynomial identity over Q in t that involves alpha only through
    alpha^2 = 1/(q(1-q)):

        -(alpha^2/(k+1)) omega_{k+2} + (k+d) omega_k
        + (alpha^2/(k+1)) [ (t+t0) - (2q-1)(k+1) ] omega_{k+1}  =  0.

    No square root is ever formed.
    """
    asq = ctx.alpha_squared  # raises for q in {0, 1}
    t = UniPoly.x()
    ws = [omega_by_raising(ctx, k) for k in range(k_max + 3)]
    for k in range(k_max + 1):
        coeff = Fraction(asq, k + 1)
        lhs = (
            ws[k + 2] * (-coeff)
            + ws[k] * (k + ctx.d)
            + (t + ctx.t0 - (2 * ctx.q - 1) * (k + 1)) * ws[k + 1] * coeff
        )
        if not lhs.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# Weyl harmonics and the tensor decomposition
# ---------------------------------------------------------------------------


def weyl_harmonics_check(ctx: RadialContext, w: WeylElement) -> bool:
    """True iff w is in the (q-independent) space of Weyl harmonics,
    i.e. sum_j [a_j, [a_j+, w]] = 0."""
    return cal_L(ctx.ordering, w).is_zero()


def decompose_weyl(ctx: RadialContext, w: WeylElement) -> list:
    """Decompose w = sum_k R^k O(h_k) with every h_k harmonic.

    Pulls w back to a polynomial, harmonically decomposes each homogeneous
    layer, and regroups by radial power.  Returns [(k, h_k)] with zero
    parts dropped.
    """
    octx = ctx.ordering
    p = unorder_q(octx, w)
    by_power: dict = {}
    for _, comp in p.homogeneous_components().items():
        for j, h in enumerate(harmonic_decompose(comp)):
            if h.is_zero():
                continue
            cur = by_power.get(j)
            by_power[j] = h if cur is None else cur + h
    return sorted(by_power.items())


def reassemble_weyl(ctx: RadialContext, parts) -> WeylElement:
    """Inverse of `decompose_weyl`: sum_k R^k O(h_k)."""
    octx = ctx.ordering
    out = WeylElement.zero(ctx.d)
    for k, h in parts:
        w = order_q(octx, h)
        for _ in range(k):
            w = cal_R(octx, w)
        out = out + w
    return out
