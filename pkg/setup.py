"""Build script. The compiled clearance kernel is optional: if Cython or a C
compiler is unavailable the package installs anyway and falls back to the
pure-Python kernel at import time."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/accessarc/_gridkernel.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"accessarc: skipping compiled kernel ({exc})")

setup(ext_modules=ext_modules)
