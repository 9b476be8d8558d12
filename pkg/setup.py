import sys

try:
    from setuptools import setup, find_packages
except:
    raise RuntimeError("Cannot import setuptools \n" "python -m pip install setuptools")
    sys.exit(1)

import os
import codecs

package_root = os.path.abspath(os.path.dirname(__file__))

version = {}
with open(os.path.join(package_root, "HyperMet/version.py")) as fp:
    exec(fp.read(), version)
version = version["__version__"]

setup(
    name="HyperMet",
    install_requires=[
        "numpy>=1.18",
        "pandas",
        "scipy",
        "tqdm",
    ],
    extras_require={"tests": ["pytest"]},
    description="Boundary inversion metrics and four point hyperbolicity analysis",
    long_description=codecs.open("README.md", "r", "utf-8").read(),
    long_description_content_type="text/markdown",
    license=("MIT"),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    version=version,
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.7",
    include_package_data=True,
    package_data={"HyperMet": ["datasets/data/*.csv"]},
    entry_points={"console_scripts": ["hypermet=HyperMet.cli:main"]},
    keywords=[
        "metric geometry",
        "gromov hyperbolicity",
        "ptolemaic spaces",
        "strong hyperbolicity",
    ],
)
