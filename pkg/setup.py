from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; drgen falls back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "drgen._ckernels",
                ["src/drgen/_ckernels.pyx"],
                language="c++",
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
