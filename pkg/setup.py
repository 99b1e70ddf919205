from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("malmsten._kernels_cy", ["src/malmsten/_kernels_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Cython unavailable: the package falls back to the pure-Python kernels.
    extensions = []

setup(ext_modules=extensions)
