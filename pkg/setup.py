"""Build script: compiles the optional permutation-search kernel.

The package is fully functional without the extension; zarpair.automorphisms
falls back to the pure-Python kernel when the compiled one is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "zarpair._autkernel",
                ["src/zarpair/_autkernel.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
