"""Build script: compiles the optional Cython kernel when Cython is available.

The package is pure Python by default.  If Cython is installed and the
kernel source is present, the hot integer kernels in
``shakeslice/_kernels/_speedups.pyx`` are compiled and picked up
automatically at import time; otherwise the pure twins in
``_kernels/pure.py`` are used.  Either way the install succeeds.
"""

import os

from setuptools import setup

PYX = os.path.join("src", "shakeslice", "_kernels", "_speedups.pyx")

ext_modules = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [PYX], compiler_directives={"language_level": "3"}
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
