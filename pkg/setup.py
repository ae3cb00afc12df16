"""Build script for the optional compiled kernels.

Metadata lives in pyproject.toml.  If Cython or a C compiler is missing the
extension is skipped and the package falls back to ``lefrees._pykernels``.
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
                "lefrees._ckernels",
                ["src/lefrees/_ckernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
