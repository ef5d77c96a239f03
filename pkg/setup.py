"""Build script.

The compiled arithmetic kernel is optional: when Cython and a C compiler
are available the extension coxwalk._kernel_cy is built, otherwise the
package falls back to the pure-Python kernel at import time.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Degrade to the pure-Python kernel instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"warning: compiled kernel skipped ({exc}); using pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} skipped ({exc}); using pure-Python kernel")


ext_modules = []
pyx = "src/coxwalk/_kernel_cy.pyx"
if not os.environ.get("COXWALK_NO_EXT") and os.path.exists(pyx):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize([pyx], language_level="3")
    except ImportError:
        print("warning: Cython not available; using pure-Python kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
