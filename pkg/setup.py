from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("rturan._kernels._fast",
                   ["src/rturan/_kernels/_fast.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []  # pure-Python fallback kernels are used instead

setup(ext_modules=extensions)
