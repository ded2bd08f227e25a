"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: paradoxlab._kernels
falls back to the pure-Python implementations when the compiled module is
absent (or when PARADOXLAB_PURE=1).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "paradoxlab._kernels._native",
                ["src/paradoxlab/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
