"""Build script: compiles the ordering-scan kernel when a toolchain is present.

The package is pure Python except for one hot loop, the exhaustive scan over
basis orderings (factorial in the matrix size).  If Cython or a C compiler is
unavailable the install still succeeds and the pure-Python fallback is used.
Set LEONARD_LAB_PURE_PYTHON=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
cmdclass = {}

if os.environ.get("LEONARD_LAB_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools.command.build_ext import build_ext

        class OptionalBuildExt(build_ext):
            """Try to build the extension; degrade to pure Python on failure."""

            def run(self):
                try:
                    super().run()
                except Exception as exc:  # compiler missing, etc.
                    self._skip(exc)

            def build_extension(self, ext):
                try:
                    super().build_extension(ext)
                except Exception as exc:
                    self._skip(exc)

            @staticmethod
            def _skip(exc):
                print(
                    "warning: compiled scan backend not built "
                    f"({exc!s}); the pure-Python fallback will be used"
                )

        ext_modules = cythonize(
            [Extension("leonard_lab._scan_cy", ["src/leonard_lab/_scan_cy.pyx"])],
            language_level="3",
        )
        cmdclass["build_ext"] = OptionalBuildExt
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass=cmdclass)
