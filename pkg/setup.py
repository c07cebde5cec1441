#!/usr/bin/env python
# -*- coding: utf-8 -*-

from os import path

from setuptools import setup

readme_file = path.join(path.dirname(path.abspath(__file__)), 'README.rst')
with open(readme_file) as f:
    readme = f.read()

install_requires = [
    'tornado>=5.0',
    'networkx>=2.4',
]
test_requires = [
    'parameterized',
    'hypothesis',
]


setup(
    name='arlab',
    version='0.1.0',
    description='Exact Turan and anti-Ramsey numbers of complete bipartite'
                ' graphs, with checkable certificates',
    long_description=readme,
    packages=[
        'arlab',
    ],
    include_package_data=True,
    license="MIT",
    zip_safe=False,
    keywords='graph theory extremal anti-ramsey rainbow coloring',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.8',
    install_requires=install_requires,
    tests_require=test_requires,
    test_suite='tests',
    entry_points={
        'console_scripts': [
            'arlab = arlab.cli:main',
            'verify-cert = arlab.cli:verify_cert_main',
        ],
    },
)
