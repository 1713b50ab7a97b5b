import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MIXPROD_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "mixprod._kernels",
                    ["src/mixprod/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # pure-Python kernels take over at import time
        ext_modules = []

setup(ext_modules=ext_modules)
