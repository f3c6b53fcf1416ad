"""Build hook for the optional compiled kernel.

The package is fully functional without it; when Cython and a C compiler are
available, `python setup.py build_ext --inplace` (or a normal pip install)
compiles permutomino._speedups and the enumeration scans pick it up at import.
"""
from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/permutomino/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
