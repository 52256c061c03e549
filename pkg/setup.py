from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-numpy install
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "irrbase._orbitcore",
                ["src/irrbase/_orbitcore.pyx"],
                extra_compile_args=["-O3", "-fopenmp"],
                extra_link_args=["-fopenmp"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
