"""Build script: compiles the optional Cython reduction kernel.

The package works without the extension (a pure-Python twin of the kernel is
selected at import time), so neither a missing Cython nor a failing C
compiler may kill the install; both downgrade to the pure build.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/singspec/_kernel_c.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []


class OptionalBuildExt(build_ext):
    """Swallow compiler failures; the pure kernel takes over at runtime."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"skipping compiled kernel: {exc}", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping compiled kernel {ext.name}: {exc}", file=sys.stderr)


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
