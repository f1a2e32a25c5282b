"""Build script: compiles the optional speedup extension when Cython and a
C compiler are available, and degrades to the pure-Python backend otherwise."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/linemaze/_kernel.pyx",
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
    for ext in ext_modules:
        # -ffp-contract=off keeps the compiled arithmetic bit-identical to the
        # pure-Python backend (no fused multiply-add).
        ext.extra_compile_args = ["-O3", "-ffp-contract=off"]
except ImportError:
    pass

setup(ext_modules=ext_modules)
