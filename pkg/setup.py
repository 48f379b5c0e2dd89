from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/catalanfans/_kernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Without Cython the package installs with the pure-Python kernels only.
    ext_modules = []

setup(ext_modules=ext_modules)
