"""Build script: compiles the fast edit-distance core when a toolchain exists.

The package is fully functional without the extension; fgx.kernels falls back
to the numpy implementation in fgx._editpure when fgx._editcore is missing.
"""

from setuptools import setup


def _extensions():
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "fgx._editcore",
        ["src/fgx/_editcore.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


try:
    setup(ext_modules=_extensions())
except Exception:
    # Toolchain missing or broken: install pure-python, kernels fall back.
    setup(ext_modules=[])
