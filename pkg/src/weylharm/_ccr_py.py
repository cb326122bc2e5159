"""Pure-Python contraction kernel for normal-ordered monomial products.

When two normal-ordered monomials are multiplied, the only noncommutative
work is rewriting the middle word a^m (a+)^n.  Repeated application of the
commutation rule a a+ = a+ a + 1 collapses into the closed-form Wick sum

    a^m (a+)^n = sum_i  C(m,i) * C(n,i) * i!  *  (a+)^(n-i) a^(m-i)

taken per mode and multiplied across modes.  ``contractions`` returns the
expansion data; callers add the outer creation/annihilation exponents and
scale by scalar coefficients.
"""

from itertools import product as _product
from math import comb, factorial


def contractions(ann, cre):
    """Expansion of a^ann * (a+)^cre over all contraction vectors.

    Parameters
    ----------
    ann, cre : tuple of int
        Annihilation exponents of the left factor and creation exponents of
        the right factor, one entry per mode.

    Returns
    -------
    tuple of (ivec, coeff)
        ``ivec`` is the per-mode contraction count to subtract from both
        exponent vectors; ``coeff`` the integer weight.
    """
    per_mode = []
    for m, n in zip(ann, cre):
        top = m if m < n else n
        per_mode.append(
            tuple((i, comb(m, i) * comb(n, i) * factorial(i)) for i in range(top + 1))
        )
    out = []
    for combo in _product(*per_mode):
        coeff = 1
        for _, c in combo:
            coeff *= c
        out.append((tuple(i for i, _ in combo), coeff))
    return tuple(out)
