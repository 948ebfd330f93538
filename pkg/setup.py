"""Build hook: compile the Cython kernel when possible.

The extension is optional; the package falls back to the pure-Python
kernel at import time if the compiled module is missing.
"""

from setuptools import setup, Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("biops._kernels.ckernel",
                   ["src/biops/_kernels/ckernel.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
