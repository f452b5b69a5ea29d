"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (pure-Python kernels
are selected at import time); the build therefore degrades gracefully when
Cython or a C toolchain is unavailable.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never let a failed extension build break the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        import warnings

        warnings.warn(
            "vedarith: compiled kernels were not built (%s); "
            "falling back to the pure-Python kernels" % exc
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("vedarith._ckernels", ["src/vedarith/_ckernels.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
