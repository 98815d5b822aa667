"""Build script: compiles the optional Cython pattern-counting kernel.

The extension is marked optional; if no C compiler (or Cython) is available
the package installs anyway and falls back to the pure-Python kernel at
import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "momentcert._patterns",
                ["src/momentcert/_patterns.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
