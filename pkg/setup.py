#!/usr/bin/env python

from setuptools import setup


with open("README.rst") as fh:
    long_description = fh.read()

test_requirements = [
    'repeated_test',
]

setup(
    name='solgraph',
    description='Solubility graphs of finite insoluble groups and checks '
                'of their invariants',
    long_description=long_description,
    long_description_content_type='text/x-rst',
    license='MIT',
    python_requires='>=3.8',
    install_requires=[
        'sigtools >= 4.0.1',
        'attrs>=19.1.0',
        'od',
        'clize >= 5.0.0',
        'numpy >= 1.20',
    ],
    tests_require=test_requirements,
    extras_require={
        'test': test_requirements,
        'solgraph-own-docs': [
            'sphinx~=4.2.0',
            'sphinx_rtd_theme',
        ],
    },
    packages=('solgraph', 'solgraph.tests'),
    test_suite='solgraph.tests',
    entry_points={
        'console_scripts': [
            'solgraph = solgraph.cli:main',
        ],
    },
    keywords=[
        'group theory', 'permutation groups', 'solubility graph',
        'graph isomorphism', 'canonical labeling',
        ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: Implementation :: CPython",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        ],
)
