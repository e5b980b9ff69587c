"""Build hook for the optional compiled row-reduction kernel.

The package is pure Python plus one Cython extension for the hot loop
(dense row reduction mod p).  If Cython or a C compiler is missing the
build falls back to installing without the extension; the package then
selects the numpy implementation at import time.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "lefschetz_forge._core",
                ["src/lefschetz_forge/_core.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception:  # pragma: no cover - exercised only on toolchain-less hosts
    extensions = []

setup(ext_modules=extensions)
