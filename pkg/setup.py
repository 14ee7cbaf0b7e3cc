# Builds the optional compiled term-arithmetic kernel.  The package works
# without it: spochar.laurent falls back to the pure-Python kernel at import
# time, so a missing compiler or missing Cython must not fail the install.
from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); using pure-Python fallback" % exc)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); using pure-Python fallback" % exc)


try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("spochar.laurent._kernel", ["src/spochar/laurent/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
