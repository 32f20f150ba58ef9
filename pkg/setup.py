"""Build script: compiles the optional accelerated diagonal kernel.

The extension is best-effort: if Cython or a C compiler is unavailable the
package installs in pure-Python mode and selects the fallback kernel at
import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("steenrod_kit._xi_fast", ["src/steenrod_kit/_xi_fast.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
