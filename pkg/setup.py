"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (kernel.py falls back
to the pure-Python implementation), so any build failure is non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/kmaut/_speedups.pyx",
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print("kmaut: skipping compiled kernel (%s); using pure-Python fallback" % exc)

setup(ext_modules=ext_modules)
