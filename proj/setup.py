"""Builds the pybind11 extension through the project's CMake tree."""

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
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DQLINK_BUILD_TESTS=OFF",
                "-DQLINK_BUILD_CLI=OFF",
                "-DQLINK_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_qlink", "-j"],
            check=True,
        )

        staged = next((build_dir / "python" / "qlink").glob("_qlink*"))
        destination = Path(self.get_ext_fullpath(ext.name)).resolve()
        destination.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(staged), str(destination))


setup(
    packages=["qlink"],
    package_dir={"qlink": "python/qlink"},
    ext_modules=[CMakeExtension("qlink._qlink")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
