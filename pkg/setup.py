import os.path

from setuptools import find_packages, setup

# single source of truth for package version
version_ns = {}  # type: ignore
with open(os.path.join("prsim", "version.py")) as f:
    exec(f.read(), version_ns)

setup(
    name="prsim",
    version=version_ns["__version__"],
    description="Sublinear single-source SimRank with a reverse PageRank hub index",
    long_description=open("README.rst").read(),
    author="PRSim Developers",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    install_requires=["numpy>=1.17,<3.0", "scipy>=1.4,<2.0"],
    extras_require={
        # the dev extra is for library developers only
        "dev": [
            # drive testing with tox
            "tox>=3.5.3,<4.0",
            # linting
            "flake8>=3.0,<4.0",
            "isort>=5.6.4,<6.0",
            "black==20.8b1",
            "flake8-bugbear==20.11.1",
            "mypy==0.800",
            # testing
            "pytest>=6.0",
            "pytest-cov<3.0",
            "pytest-xdist<3.0",
            # builds + uploads to pypi
            "twine>=3,<4",
            "wheel==0.36.2",
            # docs
            "sphinx==3.4.3",
            "sphinx-material==0.0.32",
        ]
    },
    entry_points={"console_scripts": ["prsim = prsim.cli.main:main"]},
    include_package_data=True,
    package_data={"prsim": ["prsim.cfg"]},
    keywords=["simrank", "graph similarity", "pagerank", "random walks"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Information Analysis",
    ],
)
