#!/usr/bin/env python
from setuptools import setup, find_packages
import Corespec.version

DATAFILES = [
    ("share/man/man1", ["corespec.1"]),
    ("share/doc/corespec", ["README.md", "DESIGN.md"]),
]

setup(
    name="corespec",
    version=Corespec.version.get_version(),
    description="Spectral k-core analysis of undirected graphs",
    author="corespec contributors",
    py_modules=["corespec"],
    packages=find_packages(),
    package_data={"Corespec": ["corespec-tags", "data/*.edges"]},
    entry_points={"console_scripts": ["corespec = Corespec.cli:main"]},
    test_suite="Corespec.tests",
    data_files=DATAFILES,
    python_requires=">=3.10",
    install_requires=["numpy", "scipy"],
    extras_require={"test": ["pytest", "hypothesis", "networkx"]},
)
