"""Backend selection for the contraction kernel.

The compiled extension is preferred when present; WEYLHARM_PURE=1 forces
the pure-Python fallback (used by the benchmark to compare both).  Results
are memoized here because the expansion depends only on the middle
exponent pair, which repeats heavily across products.
"""

import os

if os.environ.get("WEYLHARM_PURE") == "1":
    from ._ccr_py import contractions as _contractions

    BACKEND = "python"
else:
    try:
        from ._ccr import contractions as _contractions  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from ._ccr_py import contractions as _contractions

        BACKEND = "python"

# Insert-or-read cache; concurrent duplicate inserts are harmless because
# both writers compute identical values.
_cache: dict = {}


def contractions(ann, cre):
    key = (ann, cre)
    hit = _cache.get(key)
    if hit is None:
        hit = _contractions(ann, cre)
        _cache[key] = hit
    return hit
