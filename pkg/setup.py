from setuptools import setup, find_namespace_packages

with open("README.md", "r") as fh:
    long_description = fh.read()


setup(
    name="unbreak",
    version="0.1.0",
    python_requires=">=3.8.0",
    description="Breakability tests, universal sets and recursive understanding for graph properties",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_namespace_packages(include=["unbreak", "unbreak.*"]),
    setup_requires=[
        "setuptools>=18.0",
    ],
    scripts=["bin/unbreak"],
    install_requires=[
        "numpy",
        "pandas",
        "scipy",
        "networkx>=2.6",
        "tqdm",
        "pytest-order",
    ],
    include_package_data=True,
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
)
