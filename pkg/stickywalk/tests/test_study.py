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
Tests convergence studies and log-log fits
"""
import numpy as np
import pytest

from stickywalk.config import StudyConfig
from stickywalk.errors import ConfigError, DegenerateFitError
from stickywalk.montecarlo import Estimate
from stickywalk.schemes import PROJECTED_EULER, STICKY_EULER
from stickywalk.study import (REFERENCE_EXACT, REFERENCE_SELF, REFERENCE_USER, ConvergenceRow, conduct_study,
                              fit_hit_exponent, fit_order, reference_value, run_study)


GRID = (0.125, 0.1, 0.0625, 0.05, 0.03125, 0.025, 0.0125)
STICKY_ERRORS = (0.281866, 0.234946, 0.157878, 0.127603, 0.081223, 0.063060, 0.029335)
STICKY_HITS = (1.92, 2.11, 2.56, 2.81, 3.46, 3.82, 5.22)
PROJECTED_ERRORS = (3.667943, 2.909031, 1.826636, 1.524107, 1.119451, 0.998069, 0.756592)


def _rows(errors, hits=None, grid=GRID):
    hits = hits or [1.0] * len(grid)
    return [ConvergenceRow(h, 1000, 10.0, 0.01, e, n, 1 / h, 0.0) for h, e, n in zip(grid, errors, hits)]


def test_fit_exact_power_law():
    fit = fit_order(_rows([0.5 * h for h in GRID]))
    assert fit.slope == pytest.approx(1.0, abs=1e-12)
    assert fit.intercept == pytest.approx(np.log(0.5), abs=1e-12)
    assert fit.max_residual < 1e-12


def test_fit_published_sticky_errors():
    assert 0.96 <= fit_order(_rows(STICKY_ERRORS)).slope <= 1.0


def test_fit_published_projected_errors():
    assert 0.68 <= fit_order(_rows(PROJECTED_ERRORS)).slope <= 0.72


def test_fit_published_hit_growth():
    fit = fit_hit_exponent(_rows(STICKY_ERRORS, STICKY_HITS))
    assert 0.35 <= fit.exponent <= 0.5


def test_fit_hit_exponent_power_law():
    fit = fit_hit_exponent(_rows(STICKY_ERRORS, [3 * h ** -0.5 for h in GRID]))
    assert fit.exponent == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize('errors, grid', [
    ((0.1, ), (0.1, )),
    ((0.1, 0.0), (0.1, 0.05)),
    ((0.1, 0.2), (0.1, 0.1)),
])
def test_degenerate_fits(errors, grid):
    with pytest.raises(DegenerateFitError):
        fit_order(_rows(errors, grid=grid))


def _estimate(h, mean):
    return Estimate(mean, 0.0, 0.0, 10, 0.0, 1.0, STICKY_EULER, h, 0, 'balanced')


def test_reference_kinds(benchmark, constant):
    config = StudyConfig(grid=[(0.1, 10)])
    value, kind = reference_value(config, benchmark, [])
    assert kind == REFERENCE_EXACT
    assert value == pytest.approx(10.367879, abs=5e-7)

    bare = constant.replace(exact=None)
    estimates = [_estimate(0.1, 9.0), _estimate(0.01, 9.5)]
    assert reference_value(config, bare, estimates) == (9.5, REFERENCE_SELF)
    config.reference = 9.25
    assert reference_value(config, bare, estimates) == (9.25, REFERENCE_USER)


def test_constant_study_has_zero_errors():
    config = StudyConfig(problem='constant', grid=[(0.0625, 200), (0.125, 200), (0.1, 100)], seed=3,
                         timing=False)
    report = conduct_study(config)
    assert [row.h for row in report.rows] == [0.125, 0.1, 0.0625]
    assert [row.M for row in report.rows] == [200, 100, 200]
    assert all(row.error == 0.0 and row.estimate == 10.0 for row in report.rows)
    assert all(row.wall_time == 0.0 for row in report.rows)
    assert report.reference_kind == REFERENCE_EXACT
    assert report.fit is None


def test_study_is_deterministic():
    config = StudyConfig(grid=[(0.125, 500), (0.0625, 500)], seed=8, timing=False)
    assert run_study(config) == run_study(config)


def test_study_rejects_invalid_config():
    with pytest.raises(ConfigError, match=r'study\.grid\[0\]\.h'):
        run_study(StudyConfig(grid=[(1.5, 10)]))


@pytest.mark.slow
def test_sticky_empirical_order():
    config = StudyConfig(grid=[(h, 10 ** 6) for h in GRID], seed=77, workers=8, timing=False)
    report = conduct_study(config)
    assert 0.8 <= report.fit.slope <= 1.2
    for row in report.rows[:2]:
        assert row.error > 3 * row.halfwidth
    assert report.rows[0].avg_hits == pytest.approx(1.92, abs=0.3)
    assert report.rows[-1].avg_hits == pytest.approx(5.22, abs=0.5)
    assert 0.25 <= report.hit_fit.exponent <= 0.6


@pytest.mark.slow
def test_projected_errors_on_standard_grid():
    '''Errors on this grid are not monotone in h, so only their size is checked'''
    config = StudyConfig(scheme=PROJECTED_EULER, grid=[(h, 10 ** 5) for h in GRID], seed=77, workers=8,
                         timing=False)
    report = conduct_study(config)
    assert all(row.error < 0.3 for row in report.rows)
    assert all(row.error < tabulated for row, tabulated in zip(report.rows, PROJECTED_ERRORS))


@pytest.mark.slow
def test_projected_half_order_on_fine_grid():
    config = StudyConfig(scheme=PROJECTED_EULER, grid=[(h, 5 * 10 ** 5) for h in (0.0125, 0.005, 0.0025)],
                         seed=77, workers=8, timing=False)
    report = conduct_study(config)
    assert report.rows[0].error > report.rows[-1].error
    assert 0.2 <= report.fit.slope <= 0.75
