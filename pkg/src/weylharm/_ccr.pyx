# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled contraction kernel for normal-ordered monomial products.

Mirrors ``_ccr_py.contractions`` exactly; see that module for the formula.
Exponents are machine-size ints; coefficients are kept as Python ints so
large contraction weights never overflow.
"""

from math import comb, factorial


def contractions(tuple ann, tuple cre):
    cdef int d = len(ann)
    if d == 0:
        return (((), 1),)
    cdef int j, m, n, i, top
    cdef list per_mode = []
    cdef list mode_row
    for j in range(d):
        m = ann[j]
        n = cre[j]
        top = m if m < n else n
        mode_row = []
        for i in range(top + 1):
            mode_row.append((i, comb(m, i) * comb(n, i) * factorial(i)))
        per_mode.append(mode_row)

    cdef list out = []
    cdef list idx = [0] * d
    cdef list ivec
    cdef object coeff
    cdef int pos
    while True:
        coeff = 1
        ivec = []
        for j in range(d):
            entry = per_mode[j][idx[j]]
            ivec.append(entry[0])
            coeff = coeff * entry[1]
        out.append((tuple(ivec), coeff))
        # odometer increment over the per-mode ranges
        pos = d - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < len(per_mode[pos]):
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            break
    return tuple(out)
