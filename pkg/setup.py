"""Build hook for the optional compiled contraction kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the Cython module only accelerates
the normal-ordering hot loop.  Set WEYLHARM_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("WEYLHARM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("weylharm._ccr", ["src/weylharm/_ccr.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
