from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "dlucky._searchcore",
        ["src/dlucky/_searchcore.pyx"],
        extra_compile_args=["-O3"],
    )
]

if cythonize is not None:
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
else:
    # Without Cython the package installs pure-Python; the solver falls back
    # to the interpreted kernel at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
