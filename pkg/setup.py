"""Build hook for the optional compiled kernel backend.

The package is pure Python unless Cython is available at build time;
the import-time selector in permclass._kernels falls back to the pure
implementations whenever the extension is missing, so a failed or
skipped extension build never breaks an install.
"""
from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        "src/permclass/_kernels/_ckernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
