from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("dyckminors._ckernels", ["src/dyckminors/_ckernels.pyx"], language="c++")],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
