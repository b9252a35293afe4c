"""Build script for the compiled replication kernel.

The package works without the extension (a pure-Python engine is selected at
import time), so a missing Cython toolchain degrades the build instead of
breaking it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("clinchsim._mc_kernel", ["src/clinchsim/_mc_kernel.pyx"])],
        language_level="3",
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
