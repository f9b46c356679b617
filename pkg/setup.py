"""Build script: compiles the optional C accelerator for the hot kernels.

The package is fully functional without the extension; anything that stops
the compile (no Cython, no C compiler) downgrades the install to the pure
Python kernels instead of failing.  Set INDMATCH_NO_EXTENSION=1 to skip the
extension on purpose.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            f"WARNING: building the indmatch._ckernels accelerator failed ({exc}); "
            "falling back to the pure Python kernels",
            file=sys.stderr,
        )


ext_modules = []
if not os.environ.get("INDMATCH_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("indmatch._ckernels", ["src/indmatch/_ckernels.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        print(
            "WARNING: Cython not available; installing indmatch without the "
            "compiled kernels",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
