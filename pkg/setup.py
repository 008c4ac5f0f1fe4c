import setuptools

setuptools.setup(
    name="paperfold",
    version="0.0.1",
    description="Multidimensional paperfolding structures, their substitution and its tiling space",
    long_description=open("README.md", "r", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    licence="GNU General Public Licence v3.0",
    packages=setuptools.find_packages(exclude=["tests", "examples", "examples.*"]),
    python_requires=">=3.7",
    install_requires=["numpy>=1.20", "sympy>=1.6"],
    entry_points={"console_scripts": ["paperfold=paperfold.cli:main"]},
)
