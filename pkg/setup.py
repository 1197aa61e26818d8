"""Build script: compiles the optional C extension for the hot simulation kernels.

The package is fully functional without the extension (a numpy/scipy fallback
is selected at import time), so a failed compile only costs speed. Build
in-place for development with:

    python setup.py build_ext --inplace
"""

import numpy
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Degrade to the pure-Python backend if no compiler is available."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # CompileError, missing toolchain, ...
            print(f"warning: C extension build failed ({exc}); "
                  "falling back to the pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernels")


extensions = [
    Extension(
        "mingle._backend._ckernels",
        ["src/mingle/_backend/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
