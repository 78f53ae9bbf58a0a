import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# EIGENCUT_PURE_PYTHON=1 skips the extension build; the package then runs
# on the numpy kernels selected at import time.
extensions = []
if cythonize is not None and not os.environ.get("EIGENCUT_PURE_PYTHON"):
    extensions = cythonize(
        [
            Extension(
                "eigencut._matvec",
                ["src/eigencut/_matvec.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
