"""Builds the optional compiled kernel for sparse term arithmetic.

The extension is a pure speedup: if Cython or a C toolchain is missing the
install proceeds and the package falls back to the pure-Python kernels in
``coloredsym._poly_py`` (selected at import time by ``coloredsym._backend``).
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures so the pure-Python install still succeeds."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"WARNING: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"WARNING: skipping {ext.name} ({exc})")


ext_modules = []
if os.environ.get("COLOREDSYM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/coloredsym/_speedups.pyx"], language_level="3"
        )
    except ImportError:  # pragma: no cover - build environment dependent
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
