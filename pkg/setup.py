"""Builds the optional compiled extension for the special-function hot loops.

The package is fully functional without the extension (a NumPy fallback is
selected at import time); building it just makes kernel assembly faster.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [
            Extension(
                "sfrepro._fastfuncs",
                ["src/sfrepro/_fastfuncs.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
