from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    # optional=True: fall back to the pure-Python kernels if no compiler.
    ext_modules = cythonize(
        [
            Extension(
                "permcensus._speedups",
                ["src/permcensus/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
