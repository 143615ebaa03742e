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
"""
Shared fixtures
"""
import numpy as np
import pytest

from stickywalk.geometry import Ball, HalfSpace
from stickywalk.problem import Problem, benchmark_disk_problem, constant_problem


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run long statistical tests')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long statistical acceptance run')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


def _constant(value):
    def coefficient(t, x):
        return np.full(np.broadcast(np.asarray(t), np.asarray(x)[..., 0]).shape, value)
    return coefficient


def _vertical_diffusion(t, x):
    sigma = np.zeros(np.shape(x) + (2, ))
    sigma[..., 1, 1] = 1.0
    return sigma


def make_wall_problem(gamma=-0.5, c=0.2, g=0.3, psi=1.0, a_phi=2.0, mu=0.5, phi=10.0):
    '''Constant-coefficient problem on the half-plane x2 > 0, diffusing along x2 only'''
    return Problem(domain=HalfSpace((0.0, 1.0)),
                   horizon=1.0,
                   drift=lambda t, x: np.zeros(np.shape(x)),
                   diffusion=_vertical_diffusion,
                   potential=_constant(c),
                   source=_constant(g),
                   stickiness=lambda z: np.full(np.shape(z)[:-1], mu),
                   absorption=_constant(gamma),
                   boundary=_constant(psi),
                   terminal=lambda x: np.full(np.shape(x)[:-1], phi),
                   terminal_generator=_constant(a_phi),
                   name='wall')


@pytest.fixture
def wall_problem():
    return make_wall_problem()


@pytest.fixture(scope='session')
def benchmark():
    return benchmark_disk_problem()


@pytest.fixture(scope='session')
def constant():
    return constant_problem(10.0, Ball((0.0, 0.0), 1.25), 1.0)
