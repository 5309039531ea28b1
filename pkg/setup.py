#!/usr/bin/env python
# -*- encoding: utf-8 -*-
import io
import re
from os.path import dirname
from os.path import join

from setuptools import find_packages
from setuptools import setup


def read(*names, **kwargs):
    with io.open(
        join(dirname(__file__), *names),
        encoding=kwargs.get("encoding", "utf8"),
    ) as fh:
        return fh.read()


long_description = "%s" % (
    re.compile("^.. start-badges.*^.. end-badges", re.M | re.S).sub(
        "", read("README.rst")
    )
)


setup(
    name="cntfpga",
    version="0.1.0a1",
    license="MIT",
    description=(
        "Test and repair simulator for FPGAs built from carbon nanotube "
        "transistors and interconnects."
    ),
    long_description=long_description,
    long_description_content_type="text/x-rst",
    author="cntfpga developer group",
    packages=find_packages("src"),
    package_dir={"": "src"},
    include_package_data=True,
    zip_safe=False,
    classifiers=[
        # complete classifier list:
        # http://pypi.python.org/pypi?%3Aaction=list_classifiers
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering",
    ],
    keywords=["FPGA", "carbon nanotube", "testing", "redundancy"],
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "pandas >= 1.5.3",
        "scipy",
        "networkx",
        "oemof.tools >= 0.4.3",
    ],
    extras_require={
        "dev": [
            "pytest",
            "sphinx",
            "sphinx_rtd_theme",
        ],
    },
    entry_points={
        "console_scripts": ["cntfpga = cntfpga._console_scripts:main"]
    },
)
