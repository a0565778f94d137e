import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("grasscoh._kernel_cy", ["src/grasscoh/_kernel_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    print("Cython not available; building with the pure-Python kernel only",
          file=sys.stderr)

setup(ext_modules=ext_modules)
