# -*- coding: utf-8 -*-
# ===============LICENSE_START=======================================================
# stickywalk Apache-2.0
# ===================================================================================
# Copyright (C) 2026 stickywalk contributors. All rights reserved.
# ===================================================================================
# This stickywalk software file is distributed by the stickywalk contributors
# under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# This file is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ===============LICENSE_END=========================================================
from setuptools import setup, find_packages


with open("README.md", "r", encoding='utf-8') as file:
    long_description = file.read()


setup(
    name='stickywalk',
    version='0.1.0',
    author='stickywalk contributors',
    description='Monte Carlo solver for parabolic problems with sticky boundary conditions',
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='Apache License 2.0',
    packages=find_packages(),
    install_requires=['numpy',
                      'dill',
                      'appdirs',
                      'filelock'],
    extras_require={'tests': ['pytest']},
    entry_points={'console_scripts': ['stickywalk = stickywalk.cli:main']},
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'License :: OSI Approved :: Apache Software License',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='Monte Carlo, stochastic differential equations, sticky diffusion, Feynman-Kac, weak convergence',
    python_requires='>=3.8',
)
