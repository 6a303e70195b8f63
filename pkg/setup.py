import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PBEI_NO_EXTENSION", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("pbei._ckernels", ["src/pbei/_ckernels.pyx"], optional=True)],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
