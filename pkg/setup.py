"""Build script.

The compiled subset-scan kernel (jacgraph._speedups) is optional: when
Cython or a C compiler is unavailable, or JACGRAPH_PURE=1 is set, the
package installs without it and falls back to the pure-Python kernel at
import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip the extension instead of failing when no C compiler works."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"skipping compiled kernel: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping compiled kernel {ext.name}: {exc}")


ext_modules = []
if os.environ.get("JACGRAPH_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("jacgraph._speedups", ["src/jacgraph/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
