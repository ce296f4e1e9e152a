"""Build script: compiles the optional Cython scalar kernel.

The package is fully functional without the extension (a pure-Python twin
of the kernel is selected at import time), so a failed compile only costs
speed.  Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("qpb._scalar_cy", ["src/qpb/_scalar_cy.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - environment without Cython
    print(f"qpb: skipping Cython kernel ({exc}); pure-Python backend will be used")

setup(ext_modules=ext_modules)
