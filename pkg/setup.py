"""Build script: compiles the optional mod-p kernel extension when Cython and
a C compiler are available, and falls back to the pure-numpy kernels otherwise.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: skipping compiled kernels ({exc}); "
                  f"the pure-python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: could not build {ext.name} ({exc}); "
                  f"the pure-python backend will be used")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("eigenring._fpcore_cy", ["src/eigenring/_fpcore_cy.pyx"])],
        language_level="3",
    )
except ImportError:  # pragma: no cover - Cython not installed
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
