"""Build script: compiles the optional search kernel when Cython is available.

The package is fully functional without the extension; the dispatcher in
cayleylab.search falls back to the pure-python kernel at import time.
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
                "cayleylab._search_cy",
                ["src/cayleylab/_search_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
