from setuptools import Extension, setup

import numpy as np

# No -ffast-math: the compiled kernels must stay IEEE-exact so that they
# produce bit-identical results to the NumPy fallback.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "dockscreen.kernels._core",
                ["src/dockscreen/kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []  # pure-NumPy fallback is selected at import time

setup(ext_modules=ext_modules)
