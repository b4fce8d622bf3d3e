import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        source = Path(__file__).resolve().parent
        build = Path(self.build_temp).resolve() / ext.name
        build.mkdir(parents=True, exist_ok=True)
        config = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                str(source),
                f"-DCMAKE_BUILD_TYPE={config}",
                "-DAUCINT_PYTHON=ON",
                f"-DAUCINT_MODULE_OUTPUT={out}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", f"-j{self.parallel or ''}"],
            cwd=build,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("aucint._core")],
    cmdclass={"build_ext": CMakeBuild},
)
