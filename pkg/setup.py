"""Build script for the optional compiled Wigner kernel.

The extension is a speed-up only: if Cython or a C compiler is missing,
the package installs without it and falls back to the NumPy kernel at
import time.
"""

import os

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    openmp_flags = [] if os.environ.get("CURVEDJC_NO_OPENMP") else ["-fopenmp"]
    ext = Extension(
        "curvedjc._wigner_cy",
        sources=["src/curvedjc/_wigner_cy.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"] + openmp_flags,
        extra_link_args=openmp_flags,
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext_modules = cythonize([ext], language_level="3")
except ImportError:
    pass

setup(ext_modules=ext_modules)
