"""The Weyl algebra on 2d generators in canonical normal-ordered form.

Elements are finite Q(i)-linear combinations of normal monomials
(a_1+)^b1 ... (a_d+)^bd a_1^a1 ... a_d^ad: all creation generators to the
left of all annihilation generators, modes in ascending index order.
Multiplication rewrites to this form through the commutation rule
a_j a_k+ = a_k+ a_j + delta_jk, so equality of elements is structural
equality of their term maps.

A truncated matrix representation on occupation states provides an
independent correctness oracle for products (`fock_represent`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, NamedTuple

from ._kernel import contractions
from .scalars import GR_ONE, GR_ZERO, GaussRational, ScalarLike


class ModeMismatchError(ValueError):
    """Raised when elements over different mode counts are combined."""


class NormalMonomial(NamedTuple):
    """Creation exponents ``beta`` and annihilation exponents ``alpha``."""

    beta: tuple
    alpha: tuple

    @property
    def degree(self) -> int:
        return sum(self.beta) + sum(self.alpha)


def term_sort_key(mono: NormalMonomial):
    """Canonical output order: by (total degree, beta, alpha)."""
    return (mono.degree, mono.beta, mono.alpha)


class WeylElement:
    """A finite Q(i)-combination of normal monomials over d modes."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict | None = None):
        if d < 1:
            raise ValueError("mode count d must be >= 1")
        clean: dict = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = GaussRational.coerce(coeff)
                if coeff.is_zero():
                    continue
                if len(mono.beta) != d or len(mono.alpha) != d:
                    raise ModeMismatchError(
                        f"monomial {mono} does not have {d} modes"
                    )
                clean[mono] = coeff
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, d: int) -> "WeylElement":
        return cls(d, {})

    @classmethod
    def unit(cls, d: int) -> "WeylElement":
        z = (0,) * d
        return cls(d, {NormalMonomial(z, z): GR_ONE})

    @classmethod
    def monomial(
        cls, d: int, beta, alpha, coeff: ScalarLike = 1
    ) -> "WeylElement":
        return cls(d, {NormalMonomial(tuple(beta), tuple(alpha)): coeff})

    @classmethod
    def annihilator(cls, d: int, j: int) -> "WeylElement":
        """The generator a_j, 1 <= j <= d."""
        _check_mode(d, j)
        e = tuple(1 if k == j - 1 else 0 for k in range(d))
        return cls.monomial(d, (0,) * d, e)

    @classmethod
    def creator(cls, d: int, j: int) -> "WeylElement":
        """The generator a_j+, 1 <= j <= d."""
        _check_mode(d, j)
        e = tuple(1 if k == j - 1 else 0 for k in range(d))
        return cls.monomial(d, e, (0,) * d)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero element."""
        if not self.terms:
            return -1
        return max(m.degree for m in self.terms)

    def coefficient(self, beta, alpha) -> GaussRational:
        return self.terms.get(NormalMonomial(tuple(beta), tuple(alpha)), GR_ZERO)

    def sorted_terms(self) -> Iterator[tuple[NormalMonomial, GaussRational]]:
        for mono in sorted(self.terms, key=term_sort_key):
            yield mono, self.terms[mono]

    def graded_component(self, degree: int) -> "WeylElement":
        return WeylElement(
            self.d, {m: c for m, c in self.terms.items() if m.degree == degree}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.d, frozenset(self.terms.items())))

    # -- algebra ------------------------------------------------------------

    def _check_same(self, other: "WeylElement"):
        if self.d != other.d:
            raise ModeMismatchError(f"mode counts differ: {self.d} vs {other.d}")

    def __add__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction, GaussRational)):
            other = WeylElement.unit(self.d) * other
        self._check_same(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            acc = out.get(mono)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = acc
        return WeylElement(self.d, out)

    __radd__ = __add__

    def __sub__(self, other) -> "WeylElement":
        return self + (-other if isinstance(other, WeylElement) else -GaussRational.coerce(other))

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.d, {m: -c for m, c in self.terms.items()})

    def scale(self, coeff: ScalarLike) -> "WeylElement":
        c = GaussRational.coerce(coeff)
        if c.is_zero():
            return WeylElement.zero(self.d)
        return WeylElement(self.d, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        return weyl_mul(self, other)

    def __rmul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "WeylElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = WeylElement.unit(self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "terms": [
                {
                    "beta": list(m.beta),
                    "alpha": list(m.alpha),
                    "re": str(c.re),
                    "im": str(c.im),
                }
                for m, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeylElement":
        d = int(data["d"])
        terms = {}
        for t in data["terms"]:
            mono = NormalMonomial(tuple(t["beta"]), tuple(t["alpha"]))
            terms[mono] = GaussRational(Fraction(t["re"]), Fraction(t["im"]))
        return cls(d, terms)

    def __repr__(self) -> str:
        from .expr import format_weyl

        return f"<WeylElement d={self.d}: {format_weyl(self)}>"


def _check_mode(d: int, j: int):
    if not 1 <= j <= d:
        raise IndexError(f"mode index {j} out of range 1..{d}")


def weyl_mul(x: WeylElement, y: WeylElement) -> WeylElement:
    """Exact product, rewritten to normal form via the commutation rule."""
    x._check_same(y)
    d = x.d
    acc: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for ivec, weight in contractions(m1.alpha, m2.beta):
                beta = tuple(
                    b1 + b2 - i for b1, b2, i in zip(m1.beta, m2.beta, ivec)
                )
                alpha = tuple(
                    a1 + a2 - i for a1, a2, i in zip(m1.alpha, m2.alpha, ivec)
                )
                mono = NormalMonomial(beta, alpha)
                add = c12 * weight
                cur = acc.get(mono)
                cur = add if cur is None else cur + add
                if cur.is_zero():
                    acc.pop(mono, None)
                else:
                    acc[mono] = cur
    return WeylElement(d, acc)


def commutator(x: WeylElement, y: WeylElement) -> WeylElement:
    """[x, y] = xy - yx."""
    return weyl_mul(x, y) - weyl_mul(y, x)


def anticommutator(x: WeylElement, y: WeylElement) -> WeylElement:
    """{x, y} = xy + yx."""
    return weyl_mul(x, y) + weyl_mul(y, x)


def ad(x: WeylElement):
    """The derivation ad_x : w |-> [x, w]."""

    def action(w: WeylElement) -> WeylElement:
        return commutator(x, w)

    return action


def number_operator(d: int) -> WeylElement:
    """N = sum_j a_j+ a_j, already in normal form."""
    terms = {}
    for j in range(d):
        e = tuple(1 if k == j else 0 for k in range(d))
        terms[NormalMonomial(e, e)] = GR_ONE
    return WeylElement(d, terms)


# ---------------------------------------------------------------------------
# Truncated matrix oracle
# ---------------------------------------------------------------------------


def occupation_states(d: int, cutoff: int) -> tuple:
    """All occupation vectors n with |n| <= cutoff, graded lexicographic."""
    states = []

    def fill(prefix, left, slots):
        if slots == 1:
            states.append(tuple(prefix) + (left,))
            return
        for v in range(left + 1):
            fill(prefix + [v], left - v, slots - 1)

    for total in range(cutoff + 1):
        start = len(states)
        fill([], total, d)
        states[start:] = sorted(states[start:])
    return tuple(states)


class FockMatrix:
    """Matrix of a Weyl element on occupation states with |n| <= cutoff.

    States are the monomial basis of the polynomial model (a_j+ acts as
    multiplication by the j-th variable, a_j as the j-th partial
    derivative), so all entries are exact Gaussian rationals.  Entries are
    stored sparsely as (row, col) -> coefficient over the state list.
    """

    __slots__ = ("d", "cutoff", "states", "index", "entries")

    def __init__(self, d: int, cutoff: int, entries: dict | None = None):
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "cutoff", cutoff)
        states = occupation_states(d, cutoff)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "index", {s: i for i, s in enumerate(states)})
        clean = {}
        if entries:
            for key, c in entries.items():
                c = GaussRational.coerce(c)
                if not c.is_zero():
                    clean[key] = c
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FockMatrix is immutable")

    @property
    def dimension(self) -> int:
        return len(self.states)

    def entry(self, row_state, col_state) -> GaussRational:
        return self.entries.get(
            (self.index[tuple(row_state)], self.index[tuple(col_state)]), GR_ZERO
        )

    def matmul(self, other: "FockMatrix") -> "FockMatrix":
        if (self.d, self.cutoff) != (other.d, other.cutoff):
            raise ModeMismatchError("Fock matrices live on different spaces")
        by_row: dict = {}
        for (r, k), c in other.entries.items():
            by_row.setdefault(r, []).append((k, c))
        acc: dict = {}
        for (r, k), c in self.entries.items():
            for k2, c2 in by_row.get(k, ()):
                key = (r, k2)
                add = c * c2
                cur = acc.get(key)
                cur = add if cur is None else cur + add
                if cur.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = cur
        return FockMatrix(self.d, self.cutoff, acc)

    def column(self, col: int) -> dict:
        return {r: c for (r, k), c in self.entries.items() if k == col}

    def columns_equal(self, other: "FockMatrix", cols) -> bool:
        for col in cols:
            if self.column(col) != other.column(col):
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockMatrix):
            return NotImplemented
        return (
            self.d == other.d
            and self.cutoff == other.cutoff
            and self.entries == other.entries
        )


def fock_represent(w: WeylElement, cutoff: int) -> FockMatrix:
    """Matrix of ``w`` on the occupation states with |n| <= cutoff.

    Actions out of the truncated space are dropped, so products of
    matrices are only trustworthy on the guard-banded block; see
    `fock_product_block_agrees`.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    out = FockMatrix(w.d, cutoff)
    entries: dict = {}
    for col, n in enumerate(out.states):
        for mono, coeff in w.terms.items():
            if any(nj < aj for nj, aj in zip(n, mono.alpha)):
                continue
            target = tuple(
                nj - aj + bj for nj, aj, bj in zip(n, mono.alpha, mono.beta)
            )
            if sum(target) > cutoff:
                continue
            weight = 1
            for nj, aj in zip(n, mono.alpha):
                for step in range(aj):
                    weight *= nj - step
            key = (out.index[target], col)
            add = coeff * weight
            cur = entries.get(key)
            cur = add if cur is None else cur + add
            if cur.is_zero():
                entries.pop(key, None)
            else:
                entries[key] = cur
    return FockMatrix(w.d, cutoff, entries)


def fock_product_block_agrees(
    x: WeylElement, y: WeylElement, cutoff: int
) -> bool:
    """Oracle check: matrix of x*y vs product of matrices, off the edge.

    Truncation corrupts columns whose image can leave the state space, so
    agreement is only required on columns n with
    |n| <= cutoff - deg(x) - deg(y).
    """
    x._check_same(y)
    guard = cutoff - max(x.degree(), 0) - max(y.degree(), 0)
    product_matrix = fock_represent(weyl_mul(x, y), cutoff)
    matrix_product = fock_represent(x, cutoff).matmul(fock_represent(y, cutoff))
    cols = [
        i for i, s in enumerate(product_matrix.states) if sum(s) <= guard
    ]
    return product_matrix.columns_equal(matrix_product, cols)
