from setuptools import find_packages, setup

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("requirements.txt", "r") as fp:
    install_requires = fp.read().splitlines()

setup(
    name="DaisyHamming",
    version="0.1.0",
    description="Daisy graphs of rooted Hamming graphs: construction, isometry, Delta-classes and expansion",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="DaisyHamming contributors",
    license="BSD-3-Clause License",
    classifiers=[
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=install_requires,
    entry_points={"console_scripts": ["daisy-hamming=DaisyHamming.cli:main"]},
    packages=find_packages(exclude=("data", "docs", "examples", "samples", "scripts", "tests")),
    zip_safe=False,
)
