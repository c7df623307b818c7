from setuptools import setup, find_packages

setup(
    name="lascoux_gz",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    py_modules=["run"],
    install_requires=[
        'numpy>=1.24.0',
        'tqdm>=4.66.0',
    ],
    extras_require={
        'dev': ['pytest>=8.0.0', 'sympy>=1.12'],
    },
    entry_points={
        'console_scripts': [
            'lascoux_gz=run:main',
        ],
    },
    python_requires='>=3.8',
    description="Lascoux and Grothendieck polynomials from Demazure operators and enhanced Gelfand-Zetlin patterns",
    long_description=open('README.md').read(),
    long_description_content_type="text/markdown",
)
