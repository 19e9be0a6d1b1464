#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = [
    'numpy >= 1.17',
    'unicodecsv >= 0.14.1',
    'pystache >= 0.6.0',
]

test_requirements = [
]

setup(
    name='secants',
    version='0.1.0',
    description="Secant spectra of point sets in finite projective planes.",
    long_description=readme + '\n\n' + history,
    author="Secants developers",
    packages=[
        'secants',
        'secants.template_adapters'
    ],
    package_dir={'secants': 'secants'},
    include_package_data=True,
    install_requires=requirements,
    python_requires='>=3.8',
    entry_points={
        'console_scripts': [
            'secants = secants.cli:main',
        ],
    },
    zip_safe=False,
    keywords=['projective plane', 'finite field', 'secants', 'legendre symbol', 'hypergraph'],
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
    tests_require=test_requirements
)
