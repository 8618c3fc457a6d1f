"""Build hooks for the optional compiled sweep kernel.

The package is pure Python plus one optional Cython extension
(``skeinkit._sweep_c``).  Everything works without the extension — the
pure-Python kernel in ``skeinkit._sweep_py`` is selected automatically at
import time — so a failed compile must never fail the install.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"WARNING: compiled kernel skipped ({exc}); "
                  f"the pure-Python kernel will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"WARNING: {ext.name} not built ({exc}); "
                  f"the pure-Python kernel will be used")


def _extensions():
    if os.environ.get("SKEINKIT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - build env without Cython
        return []
    return cythonize(
        ["src/skeinkit/_sweep_c.pyx"],
        language_level=3,
        annotate=False,
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
