"""Exact terminating hypergeometric series and named polynomial families.

Everything here is a finite sum evaluated in Q(i) or in polynomials over
Q(i); there is no convergence logic anywhere.  Series factors may be
exact scalars or polynomials (e.g. the -t upper parameter that makes a
Gauss series a polynomial of t, or a + i*x for the complex-argument
families); lower parameters must be scalars and are pole-checked over the
finitely many terms actually used.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .scalars import GR_I, GR_ONE, GaussRational, UniPoly


class InvalidParameterError(ValueError):
    """A lower parameter hits a nonpositive integer inside the series."""


def pochhammer(base, n: int):
    """Shifted factorial (base)_n = base (base+1) ... (base+n-1).

    Works for exact scalars and for UniPoly bases; (base)_0 = 1.
    """
    if n < 0:
        raise ValueError("pochhammer length must be >= 0")
    out = UniPoly((GR_ONE,)) if isinstance(base, UniPoly) else GR_ONE
    for m in range(n):
        out = out * (base + m)
    return out


def minus_t_poly() -> UniPoly:
    """The polynomial -t, the usual terminating upper parameter."""
    return UniPoly((0, -1))


def _check_lower(lower, nterms: int):
    value = lower if isinstance(lower, Fraction) else Fraction(lower)
    for m in range(nterms - 1):
        if value + m == 0:
            raise InvalidParameterError(
                f"lower parameter {lower} hits zero at term {m + 1}"
            )


def terminating_series(uppers, lowers, arg, nterms: int) -> UniPoly:
    """sum_{j<nterms} prod(u)_j / (prod(l)_j j!) * arg^j as a UniPoly.

    ``uppers`` may mix scalars and UniPoly factors; ``lowers`` and ``arg``
    must be exact scalars.  The result is a polynomial (a constant one
    when no upper factor is a polynomial).
    """
    if nterms < 1:
        raise ValueError("series needs at least one term")
    for lower in lowers:
        _check_lower(lower, nterms)
    argc = GaussRational.coerce(arg)
    term = UniPoly((GR_ONE,))
    total = term
    for j in range(nterms - 1):
        for u in uppers:
            term = term * (u + j)
        denom = GaussRational.coerce(j + 1)
        for low in lowers:
            denom = denom * GaussRational.coerce(low + j)
        term = term * (argc / denom)
        total = total + term
    return total


def hyp2F1_terminating_poly(k: int, c, x) -> UniPoly:
    """The Gauss series with upper parameters (-t, -k), as a polynomial of t.

    Degree k exactly when x != 0; requires (c)_j nonzero for j <= k.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    return terminating_series([minus_t_poly(), Fraction(-k)], [c], x, k + 1)


def gauss_contiguous_check(k: int, c, x) -> bool:
    """Exact check of two Gauss contiguous relations at (a, b) = (-t, -k).

    Shifting b walks the polynomial family in k; shifting a is a unit
    shift of the variable.  Both must hold as polynomial identities:

      [-2k - c + kx - xt] F_k  + (c+k) F_{k+1}   - k(x-1) F_{k-1}      = 0
      [(x-2)t - c - kx]   F_k  + (c+t) F_k(t+1)  + (1-x)t F_k(t-1)     = 0
    """
    c = Fraction(c)
    x = Fraction(x)
    t = UniPoly.x()
    f_k = hyp2F1_terminating_poly(k, c, x)

    f_next = hyp2F1_terminating_poly(k + 1, c, x)
    lhs1 = (t * (-x) + (-2 * k - c + k * x)) * f_k + f_next * (c + k)
    if k >= 1:
        f_prev = hyp2F1_terminating_poly(k - 1, c, x)
        lhs1 = lhs1 + f_prev * (-k * (x - 1))
    if not lhs1.is_zero():
        return False

    lhs2 = (t * (x - 2) - c - k * x) * f_k
    lhs2 = lhs2 + (t + c) * f_k.compose_shift(1)
    lhs2 = lhs2 + t * (1 - x) * f_k.compose_shift(-1)
    return lhs2.is_zero()


def continuous_hahn_poly(k: int, a, b, c, d) -> UniPoly:
    """Continuous Hahn polynomial p_k(x; a, b, c, d) over Q(i):

        i^k (a+c)_k (a+d)_k / k! *
            3F2(-k, k+a+b+c+d-1, a+ix; a+c, a+d; 1)

    expanded as an exact polynomial in x.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    complex_arg = UniPoly((GaussRational(a), GR_I))  # a + i*x
    series = terminating_series(
        [Fraction(-k), k + a + b + c + d - 1, complex_arg],
        [a + c, a + d],
        1,
        k + 1,
    )
    prefactor = GR_I**k * pochhammer(a + c, k) * pochhammer(a + d, k)
    return series * (prefactor / factorial(k))


def meixner_pollaczek_poly(n: int, a) -> UniPoly:
    """Meixner-Pollaczek polynomial at angle pi/2, over Q(i):

        i^n * 2F1(-n, a+ix, 2a; 2)

    (the angle-dependent constants are exact in Q(i) only at pi/2, which
    is the only angle used here).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    a = Fraction(a)
    complex_arg = UniPoly((GaussRational(a), GR_I))
    series = terminating_series([Fraction(-n), complex_arg], [2 * a], 2, n + 1)
    return series * GR_I**n


def hyp2f1_3f2_connection_check(n: int, a) -> bool:
    """Exact check of 2F1(-n, 2a+2ix, 4a; 2) = 3F2(-n, n+4a, a+ix; 2a, 2a+1/2; 1)."""
    a = Fraction(a)
    lhs = terminating_series(
        [Fraction(-n), UniPoly((GaussRational(2 * a), 2 * GR_I))],
        [4 * a],
        2,
        n + 1,
    )
    rhs = terminating_series(
        [Fraction(-n), n + 4 * a, UniPoly((GaussRational(a), GR_I))],
        [2 * a, 2 * a + Fraction(1, 2)],
        1,
        n + 1,
    )
    return lhs == rhs


def krawtchouk_poly(k: int, p, n_par) -> UniPoly:
    """Krawtchouk polynomial K_k(t, p, N) = 2F1(-k, -t, -N; 1/p)."""
    p = Fraction(p)
    return terminating_series(
        [Fraction(-k), minus_t_poly()], [-Fraction(n_par)], 1 / p, k + 1
    )


def meixner_poly(k: int, beta, c_par) -> UniPoly:
    """Meixner polynomial M_k(t, beta, c) = 2F1(-k, -t, beta; 1 - 1/c)."""
    c_par = Fraction(c_par)
    return terminating_series(
        [Fraction(-k), minus_t_poly()], [Fraction(beta)], 1 - 1 / c_par, k + 1
    )


def krawtchouk_meixner_check(k: int, q, d: int) -> bool:
    """The Gauss form of the radial polynomials coincides with a
    Krawtchouk and with a Meixner parameterization:

        2F1(-t, -k, d; 1/(1-q)) = K_k(t, 1-q, -d) = M_k(t, d, -(1-q)/q).
    """
    q = Fraction(q)
    if q in (0, 1):
        raise InvalidParameterError("the Meixner form needs q outside {0, 1}")
    gauss = hyp2F1_terminating_poly(k, Fraction(d), 1 / (1 - q))
    kraw = krawtchouk_poly(k, 1 - q, -d)
    meix = meixner_poly(k, d, -(1 - q) / q)
    return gauss == kraw and kraw == meix
