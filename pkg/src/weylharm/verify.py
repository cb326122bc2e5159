"""Reproducible verification suites behind the `verify` CLI verb.

Each suite samples deterministically from a recorded 64-bit seed and
returns a plain report dict::

    {"suite": ..., "params": {...}, "seed": ..., "cases": [
        {"id": ..., "status": "PASS" | "FAIL", "detail": ...}, ...]}

Reports are built in a fixed order so identical invocations serialize to
byte-identical JSON.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from . import linalg
from .ordering import OrderingContext, cal_E, cal_L, cal_R, order_q
from .poly import (
    CMonomial,
    CPolynomial,
    harmonic_dim,
    is_harmonic,
    op_E,
    op_L,
    op_R,
)
from .radial import (
    RadialContext,
    check_difference_equation,
    check_fg_recurrence,
    decompose_weyl,
    difference_triple,
    eta,
    express_in_N,
    g_poly_symmetric,
    nonorthogonality_certificate,
    omega,
    omega_by_raising,
    omega_closed_form,
    reassemble_weyl,
    weyl_harmonics_check,
)
from .scalars import GaussRational
from .specfun import (
    continuous_hahn_poly,
    gauss_contiguous_check,
    hyp2f1_3f2_connection_check,
    krawtchouk_meixner_check,
    meixner_pollaczek_poly,
    pochhammer,
)
from .weyl import NormalMonomial, WeylElement

Q_GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


# ---------------------------------------------------------------------------
# Deterministic sampling
# ---------------------------------------------------------------------------


def random_gauss(rng: random.Random, span: int = 3) -> GaussRational:
    re = Fraction(rng.randint(-span, span), rng.randint(1, 3))
    im = Fraction(rng.randint(-span, span), rng.randint(1, 3))
    return GaussRational(re, im)


def _random_exponents(rng: random.Random, d: int, total: int) -> tuple:
    cuts = sorted(rng.randint(0, total) for _ in range(d - 1))
    parts = []
    prev = 0
    for c in cuts + [total]:
        parts.append(c - prev)
        prev = c
    return tuple(parts)


def random_cpoly(
    rng: random.Random, d: int, max_degree: int, n_terms: int = 4
) -> CPolynomial:
    terms = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        split = rng.randint(0, deg)
        alpha = _random_exponents(rng, d, split)
        beta = _random_exponents(rng, d, deg - split)
        terms[CMonomial(alpha, beta)] = random_gauss(rng)
    return CPolynomial(d, terms)


def random_homogeneous_cpoly(
    rng: random.Random, d: int, degree: int, n_terms: int = 4
) -> CPolynomial:
    terms = {}
    for _ in range(n_terms):
        split = rng.randint(0, degree)
        alpha = _random_exponents(rng, d, split)
        beta = _random_exponents(rng, d, degree - split)
        terms[CMonomial(alpha, beta)] = random_gauss(rng)
    if not terms:
        terms[CMonomial((degree,) + (0,) * (d - 1), (0,) * d)] = GaussRational(1)
    return CPolynomial(d, terms)


def random_weyl(
    rng: random.Random, d: int, max_degree: int, n_terms: int = 4
) -> WeylElement:
    terms = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        split = rng.randint(0, deg)
        beta = _random_exponents(rng, d, split)
        alpha = _random_exponents(rng, d, deg - split)
        terms[NormalMonomial(beta, alpha)] = random_gauss(rng)
    return WeylElement(d, terms)


# ---------------------------------------------------------------------------
# Report plumbing
# ---------------------------------------------------------------------------


def _case(case_id: str, passed: bool, detail: str = "") -> dict:
    return {"id": case_id, "status": "PASS" if passed else "FAIL", "detail": detail}


def _report(suite: str, params: dict, seed: int, cases: list) -> dict:
    return {"suite": suite, "params": params, "seed": seed, "cases": cases}


def report_failed(report: dict) -> bool:
    return any(c["status"] != "PASS" for c in report["cases"])


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def suite_sl2(d: int, q: Fraction, deg: int = 4, count: int = 20, seed: int = 0) -> dict:
    """Commutation relations of the triple, on both algebras."""
    rng = random.Random(seed)
    ctx = OrderingContext(d, q)
    ok_p = [True, True, True]
    ok_w = [True, True, True]
    for _ in range(count):
        p = random_cpoly(rng, d, deg)
        ok_p[0] &= (op_R(op_L(p)) - op_L(op_R(p))) == -op_E(p)
        ok_p[1] &= (op_E(op_R(p)) - op_R(op_E(p))) == 2 * op_R(p)
        ok_p[2] &= (op_E(op_L(p)) - op_L(op_E(p))) == -2 * op_L(p)
        w = random_weyl(rng, d, deg)
        ok_w[0] &= (cal_R(ctx, cal_L(ctx, w)) - cal_L(ctx, cal_R(ctx, w))) == -cal_E(ctx, w)
        ok_w[1] &= (cal_E(ctx, cal_R(ctx, w)) - cal_R(ctx, cal_E(ctx, w))) == cal_R(ctx, w).scale(2)
        ok_w[2] &= (cal_E(ctx, cal_L(ctx, w)) - cal_L(ctx, cal_E(ctx, w))) == cal_L(ctx, w).scale(-2)
    detail = f"{count} random elements, degree <= {deg}"
    names = ("[raise,lower]=-grade", "[grade,raise]=2raise", "[grade,lower]=-2lower")
    cases = [
        _case(f"poly:{name}", ok, detail) for name, ok in zip(names, ok_p)
    ] + [
        _case(f"weyl:{name}", ok, detail) for name, ok in zip(names, ok_w)
    ]
    return _report("sl2", {"d": d, "q": str(q), "deg": deg, "count": count}, seed, cases)


def suite_intertwine(
    d: int, q: Fraction, deg: int = 4, count: int = 20, seed: int = 0
) -> dict:
    """Ordering map commutes with the triple on homogeneous inputs."""
    rng = random.Random(seed)
    ctx = OrderingContext(d, q)
    ok = [True, True, True]
    for _ in range(count):
        degree = rng.randint(0, deg)
        p = random_homogeneous_cpoly(rng, d, degree)
        w = order_q(ctx, p)
        ok[0] &= order_q(ctx, op_R(p)) == cal_R(ctx, w)
        ok[1] &= order_q(ctx, op_L(p)) == cal_L(ctx, w)
        ok[2] &= order_q(ctx, op_E(p)) == cal_E(ctx, w)
    detail = f"{count} random homogeneous elements, degree <= {deg}"
    cases = [
        _case("order∘R = R∘order", ok[0], detail),
        _case("order∘L = L∘order", ok[1], detail),
        _case("order∘E = E∘order", ok[2], detail),
    ]
    return _report(
        "intertwine", {"d": d, "q": str(q), "deg": deg, "count": count}, seed, cases
    )


def omega_table(d: int, q: Fraction, k_max: int) -> list:
    ctx = RadialContext(d, q)
    return [
        {"k": k, "coeffs": [str(c) for c in omega(ctx, k).coeffs]}
        for k in range(k_max + 1)
    ]


def suite_radial(d: int, q: Fraction, k_max: int = 8, seed: int = 0) -> dict:
    """The radial tower: all computation routes and their certificates."""
    ctx = RadialContext(d, q)
    weyl_k = min(k_max, 6)
    ok_triple = all(
        express_in_N(eta(ctx, k)) == omega(ctx, k) == omega_closed_form(ctx, k)
        for k in range(weyl_k + 1)
    )
    ok_raising = all(
        omega_by_raising(ctx, k) == omega(ctx, k) for k in range(k_max + 1)
    )
    ok_dif = all(check_difference_equation(ctx, k) for k in range(k_max + 1))
    ok_weight = True
    for k in range(1, k_max + 1):
        wk = omega(ctx, k)
        r, low, e = difference_triple(ctx, wk)
        ok_weight &= r == omega(ctx, k + 1)
        ok_weight &= low == omega(ctx, k - 1) * (k * (k + d - 1))
        ok_weight &= e == wk * (2 * k + d)
    if q in (0, 1):
        fg_case = _case("renormalized recurrence (pulled back)", True,
                        "skipped: scale undefined at q in {0,1}")
    else:
        fg_case = _case(
            "renormalized recurrence (pulled back)",
            check_fg_recurrence(ctx, k_max),
            f"k <= {k_max}",
        )
    ok_cert = True
    for k in range(1, k_max + 1):
        cert = nonorthogonality_certificate(ctx, k)
        expected = GaussRational(-q * (1 - q) * k * (k + d - 1))
        ok_cert &= cert == expected and Fraction(cert.re) <= 0
    cases = [
        _case("eta -> polynomial-of-N == recurrence == closed form", ok_triple,
              f"full Weyl route, k <= {weyl_k}"),
        _case("raising-operator route == recurrence", ok_raising, f"k <= {k_max}"),
        _case("difference equation", ok_dif, f"k <= {k_max}"),
        _case("weight-basis relations (univariate)", ok_weight, f"k <= {k_max}"),
        fg_case,
        _case("non-orthogonality certificate", ok_cert,
              "equals -q(1-q)k(k+d-1) and <= 0"),
    ]
    report = _report(
        "radial", {"d": d, "q": str(q), "kmax": k_max}, seed, cases
    )
    report["table"] = omega_table(d, q, k_max)
    return report


def _weyl_vector(w: WeylElement) -> dict:
    return dict(w.terms)


def harmonic_basis(d: int, k: int) -> list:
    """Exact basis of the degree-k harmonic polynomials in z, zbar."""
    monos = _homogeneous_monomials(d, k)
    rows = []
    for mono in monos:
        image = op_L(CPolynomial(d, {mono: GaussRational(1)}))
        rows.append(dict(image.terms))
    # kernel of the transpose map: solve L(p) = 0 for p in the span
    columns = monos
    matrix_rows = _transpose_rows(rows, columns)
    basis_vectors = linalg.kernel_basis(matrix_rows, columns)
    return [CPolynomial(d, vec) for vec in basis_vectors]


def _homogeneous_monomials(d: int, k: int) -> list:
    """All (alpha, beta) exponent pairs with |alpha| + |beta| = k."""
    whole = []

    def fill(prefix, left, slots):
        if slots == 1:
            whole.append(tuple(prefix) + (left,))
            return
        for v in range(left + 1):
            fill(prefix + [v], left - v, slots - 1)

    fill([], k, 2 * d)
    return [CMonomial(e[:d], e[d:]) for e in whole]


def _transpose_rows(rows: list, columns: list) -> list:
    """Rows indexed by source monomial -> rows indexed by image monomial."""
    by_image: dict = {}
    for src, image in zip(columns, rows):
        for img_mono, coeff in image.items():
            by_image.setdefault(img_mono, {})[src] = coeff
    return list(by_image.values())


def suite_harmonics(
    d: int, k_max: int = 4, q_pairs=None, count: int = 10, deg: int = 5, seed: int = 0
) -> dict:
    """q-independence of Weyl harmonics, dimensions, and the tensor
    decomposition round-trip."""
    rng = random.Random(seed)
    if q_pairs is None:
        q_pairs = [
            (Fraction(0), Fraction(1)),
            (Fraction(0), Fraction(1, 2)),
            (Fraction(1, 4), Fraction(3, 4)),
            (Fraction(1, 2), Fraction(1, 3)),
        ]
    cases = []

    ok_dim = True
    detail_dims = []
    for k in range(k_max + 1):
        basis = harmonic_basis(d, k)
        expected = harmonic_dim(2 * d, k)
        detail_dims.append(f"k={k}:{len(basis)}")
        ok_dim &= len(basis) == expected
        ok_dim &= all(is_harmonic(h) for h in basis)
    cases.append(
        _case("harmonic dimensions match kernel ranks", ok_dim, ",".join(detail_dims))
    )

    ok_span = True
    for q1, q2 in q_pairs:
        c1, c2 = OrderingContext(d, q1), OrderingContext(d, q2)
        for k in range(k_max + 1):
            basis = harmonic_basis(d, k)
            rows1 = [_weyl_vector(order_q(c1, h)) for h in basis]
            rows2 = [_weyl_vector(order_q(c2, h)) for h in basis]
            ok_span &= linalg.same_row_space(rows1, rows2)
    cases.append(
        _case(
            "Weyl harmonics independent of ordering parameter",
            ok_span,
            f"{len(q_pairs)} parameter pairs, k <= {k_max}",
        )
    )

    ok_member = True
    for q1, _ in q_pairs:
        ctx = RadialContext(d, q1)
        octx = ctx.ordering
        for k in range(k_max + 1):
            for h in harmonic_basis(d, k)[:3]:
                ok_member &= weyl_harmonics_check(ctx, order_q(octx, h))
    cases.append(
        _case("ordered harmonics pass the kernel membership test", ok_member, "")
    )

    ok_round = True
    for _ in range(count):
        q = Q_GRID[rng.randrange(len(Q_GRID))]
        ctx = RadialContext(d, q)
        w = random_weyl(rng, d, deg)
        parts = decompose_weyl(ctx, w)
        ok_round &= all(is_harmonic(h) for _, h in parts)
        ok_round &= reassemble_weyl(ctx, parts) == w
    cases.append(
        _case(
            "radial-times-harmonic decomposition round-trip",
            ok_round,
            f"{count} random elements, degree <= {deg}",
        )
    )
    return _report(
        "harmonics",
        {"d": d, "kmax": k_max, "count": count, "deg": deg,
         "q_pairs": [[str(a), str(b)] for a, b in q_pairs]},
        seed,
        cases,
    )


def suite_hahn(k_max: int = 8, d_max: int = 4, seed: int = 0) -> dict:
    """Identification of the symmetric radial family with the named
    hypergeometric families, plus the series-level identities."""
    ok_hahn = True
    ok_mp = True
    for d in range(1, d_max + 1):
        for k in range(k_max + 1):
            g = g_poly_symmetric(d, k)
            a = Fraction(d, 4)
            b = a + Fraction(1, 2)
            ch = continuous_hahn_poly(k, a, b, a, b).compose_linear(Fraction(1, 4), 0)
            factor = pochhammer(Fraction(d), k) / (
                pochhammer(Fraction(d, 2), k)
                * pochhammer(Fraction(d, 2) + Fraction(1, 2), k)
            )
            ok_hahn &= ch * factor == g
            mp = meixner_pollaczek_poly(k, Fraction(d, 2)).compose_linear(
                Fraction(1, 2), 0
            )
            fall = Fraction(1)
            for i in range(k):
                fall *= Fraction(d + i, i + 1)
            ok_mp &= mp * fall == g
    ok_conn = all(
        hyp2f1_3f2_connection_check(n, Fraction(d, 2))
        for n in range(k_max + 1)
        for d in range(1, d_max + 1)
    )
    ok_contig = all(
        gauss_contiguous_check(k, Fraction(c), Fraction(2))
        for k in range(1, k_max + 1)
        for c in range(1, d_max + 1)
    )
    ok_km = all(
        krawtchouk_meixner_check(k, q, d)
        for k in range(k_max + 1)
        for q in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
        for d in range(1, min(d_max, 3) + 1)
    )
    cases = [
        _case("continuous-Hahn identification", ok_hahn, f"k <= {k_max}, d <= {d_max}"),
        _case("Meixner-Pollaczek identification", ok_mp, f"k <= {k_max}, d <= {d_max}"),
        _case("2F1 <-> 3F2 connection", ok_conn, f"n <= {k_max}"),
        _case("Gauss contiguous relations", ok_contig, ""),
        _case("Krawtchouk/Meixner parameterizations", ok_km, ""),
    ]
    return _report("hahn", {"kmax": k_max, "dmax": d_max}, seed, cases)


def suite_orthogonality(d: int, k_max: int = 8, tol: float = 1e-8, seed: int = 0) -> dict:
    from .numerics import orthogonality_stable

    res = orthogonality_stable(d, k_max)
    off = np.array(res["normalized"], dtype=float).copy()
    np.fill_diagonal(off, 0.0)
    worst = float(off.max()) if off.size else 0.0
    cases = [
        _case("normalized off-diagonals below tolerance", worst < tol,
              f"max {worst:.3e} vs tol {tol:.1e}"),
        _case("diagonal entries positive", res["diagonal_positive"], ""),
        _case("stable under panel doubling", res["stable"],
              f"drift {res['drift']:.3e}"),
    ]
    report = _report(
        "orthogonality", {"d": d, "kmax": k_max, "tol": tol}, seed, cases
    )
    report["diagonal"] = [float(x) for x in np.diag(res["gram"])]
    report["tail_bound"] = float(res["tail_bound"])
    return report


def suite_genfun(
    q: Fraction = Fraction(1, 2),
    d: int = 1,
    order: int = 10,
    tol: float = 1e-10,
    seed: int = 0,
) -> dict:
    from math import factorial

    from .numerics import (
        genfun_ode_residual,
        genfun_taylor_coefficients,
        unipoly_eval_float,
    )

    cases = []
    if q == Fraction(1, 2):
        worst = 0.0
        for lam in (0.0, 1.0, 2.5):
            coeffs = genfun_taylor_coefficients(q, d, lam, order)
            for k in range(order + 1):
                exact = complex(unipoly_eval_float(g_poly_symmetric(d, k), lam))
                worst = max(worst, abs(coeffs[k] - exact))
        cases.append(
            _case("Taylor coefficients match symmetric family", worst < tol,
                  f"max err {worst:.3e}, order <= {order}")
        )
    else:
        ctx = RadialContext(d, q)
        alpha = float(ctx.alpha_squared) ** 0.5
        t0 = float(ctx.t0)
        worst = 0.0
        for t in (0, 1, 2):
            lam = 1j * alpha * (t + t0)
            coeffs = genfun_taylor_coefficients(q, d, lam, order)
            for k in range(order + 1):
                exact = (
                    (1j * alpha) ** k
                    / factorial(k)
                    * complex(unipoly_eval_float(omega_by_raising(ctx, k), t))
                )
                worst = max(worst, abs(coeffs[k] - exact))
        cases.append(
            _case("coefficients match renormalized radial family on the "
                  "imaginary line", worst < max(tol, 1e-9),
                  f"max err {worst:.3e}, order <= {order}")
        )
    worst_res = 0.0
    for s in (0.05, 0.1, -0.08):
        for lam in (0.3, 1.0):
            worst_res = max(worst_res, abs(genfun_ode_residual(q, d, lam, s)))
    cases.append(
        _case("first-order ODE residual", worst_res < 1e-8,
              f"max residual {worst_res:.3e}")
    )
    return _report(
        "genfun", {"q": str(q), "d": d, "order": order, "tol": tol}, seed, cases
    )


def suite_all(seed: int = 0, quick: bool = True) -> list:
    """The whole battery at desk scale; returns a list of reports."""
    reports = []
    deg = 3 if quick else 4
    count = 6 if quick else 20
    for d in (1, 2):
        for q in (Fraction(0), Fraction(1, 2), Fraction(3, 4)):
            reports.append(suite_sl2(d, q, deg=deg, count=count, seed=seed))
            reports.append(suite_intertwine(d, q, deg=deg, count=count, seed=seed))
            reports.append(suite_radial(d, q, k_max=6 if quick else 8, seed=seed))
    reports.append(suite_harmonics(1, k_max=3 if quick else 4,
                                   count=4 if quick else 10, seed=seed))
    reports.append(suite_harmonics(2, k_max=3 if quick else 4,
                                   count=4 if quick else 10, seed=seed))
    reports.append(suite_hahn(k_max=6 if quick else 8, d_max=3 if quick else 4,
                              seed=seed))
    for d in (1, 2, 3):
        reports.append(suite_orthogonality(d, k_max=6 if quick else 8, seed=seed))
    reports.append(suite_genfun(Fraction(1, 2), 1, order=8 if quick else 10,
                                seed=seed))
    reports.append(suite_genfun(Fraction(1, 4), 2, order=8, tol=1e-9, seed=seed))
    return reports
