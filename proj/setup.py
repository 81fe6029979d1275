from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "commsemi._commsemi",
    sources=[
        "bindings/pymodule.cpp",
        "src/transform.cpp",
        "src/semigroup.cpp",
        "src/commgraph.cpp",
        "src/lpaths.cpp",
        "src/constructions.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
