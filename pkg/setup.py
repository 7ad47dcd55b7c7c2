"""Build hook for the optional compiled signature kernel.

The extension is optional: without Cython or a C compiler the package
falls back to the pure-Python kernel in ``gordian._kernels_py``.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build without Cython
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("gordian._kernels", ["src/gordian/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
