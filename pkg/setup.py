"""Build script: compiles the optional scan-kernel extension when Cython is available.

The package is fully functional without the extension; ``kreinwave.scans``
falls back to a scipy-based implementation at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kreinwave._scan",
                ["src/kreinwave/_scan.pyx"],
                include_dirs=[np.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
