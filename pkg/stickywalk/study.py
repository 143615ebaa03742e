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
Provides convergence studies: estimates over an h-grid, errors against a reference,
and log-log fits of the empirical weak order and of boundary-hit growth
"""
import time
from collections import namedtuple

import numpy as np

from .errors import DegenerateFitError, TrajectoryError
from .logging import get_logger
from .montecarlo import estimate


logger = get_logger(__name__)

REFERENCE_EXACT = 'exact'
REFERENCE_USER = 'user'
REFERENCE_SELF = 'self'


class ConvergenceRow(namedtuple('ConvergenceRow', 'h M estimate halfwidth error avg_hits avg_steps wall_time')):
    '''One row of a convergence table'''


class OrderFit(namedtuple('OrderFit', 'slope intercept max_residual')):
    '''Least-squares line ln(error) = slope ln(h) + intercept'''

    def predict(self, ln_h):
        return self.slope * np.asarray(ln_h, dtype=float) + self.intercept


class HitFit(namedtuple('HitFit', 'exponent intercept max_residual')):
    '''Least-squares fit of avg_hits = exp(intercept) h^(-exponent)'''


class StudyReport(namedtuple('StudyReport', 'config rows reference reference_kind fit hit_fit')):
    '''Rows of a study with the reference they were measured against and the fits, if any'''


def run_study(config):
    '''Returns one ``ConvergenceRow`` per (h, M) pair of `config`, ordered by descending h'''
    return conduct_study(config).rows


def conduct_study(config):
    '''Runs the study described by `config` and returns a ``StudyReport``'''
    config.validate()
    problem = config.build_problem()
    grid = sorted(config.grid, key=lambda pair: -pair[0])

    estimates = []
    for h, samples in grid:
        started = time.perf_counter()
        try:
            est = estimate(problem, config.scheme, config.t0, config.x0, h, samples, seed=config.seed,
                           workers=config.workers, multiplier=config.multiplier, variant=config.variant)
        except TrajectoryError as e:
            raise TrajectoryError(e.index, "{} (study {}, h={}, M={}, seed={})".format(
                e.message, config.name, h, samples, config.seed))
        wall_time = time.perf_counter() - started if config.timing else 0.0
        estimates.append((est, wall_time))

    reference, kind = reference_value(config, problem, [est for est, _ in estimates])
    rows = []
    for est, wall_time in estimates:
        row = ConvergenceRow(h=est.h, M=est.samples, estimate=est.mean, halfwidth=est.halfwidth,
                             error=abs(est.mean - reference), avg_hits=est.avg_hits,
                             avg_steps=est.avg_steps, wall_time=wall_time)
        logger.info("%s h=%g M=%d estimate=%.6f halfwidth=%.6f error=%.6f avg_hits=%.3f",
                    config.name, row.h, row.M, row.estimate, row.halfwidth, row.error, row.avg_hits)
        rows.append(row)

    # rows measured against themselves (self reference, constant problems) carry no error signal
    usable = [r for r in rows if r.error > 0]
    return StudyReport(config, rows, reference, kind, _try_fit(fit_order, usable, config.name),
                       _try_fit(fit_hit_exponent, rows, config.name))


def reference_value(config, problem, estimates):
    '''
    Returns (value, kind) of the reference the errors are measured against

    The exact solution is used when the problem has one, then a configured reference,
    and otherwise the estimate of the finest step size.
    '''
    if problem.exact is not None:
        x0 = np.asarray(config.x0, dtype=float).reshape(1, -1)
        return float(np.asarray(problem.exact.value(config.t0, x0)).reshape(-1)[0]), REFERENCE_EXACT
    if config.reference is not None:
        return float(config.reference), REFERENCE_USER
    finest = min(estimates, key=lambda est: est.h)
    return finest.mean, REFERENCE_SELF


def fit_order(rows):
    '''Fits ln(error) on ln(h) by ordinary least squares; the slope is the empirical weak order'''
    slope, intercept, residual = _loglog_fit([r.h for r in rows], [r.error for r in rows], 'error')
    return OrderFit(slope, intercept, residual)


def fit_hit_exponent(rows):
    '''Fits avg_hits proportional to h^(-exponent) by least squares in log-log coordinates'''
    slope, intercept, residual = _loglog_fit([r.h for r in rows], [r.avg_hits for r in rows], 'avg_hits')
    return HitFit(-slope, intercept, residual)


def _loglog_fit(h, values, label):
    '''Returns slope, intercept and the largest absolute residual of ln(values) against ln(h)'''
    h = np.asarray(h, dtype=float)
    values = np.asarray(values, dtype=float)
    if h.size < 2:
        raise DegenerateFitError("A log-log fit needs at least 2 rows, got {}".format(h.size))
    if np.any(values <= 0):
        raise DegenerateFitError("A log-log fit needs every {} > 0, got {}".format(label, values.tolist()))
    if np.unique(h).size < 2:
        raise DegenerateFitError("A log-log fit needs at least 2 distinct step sizes")

    x, y = np.log(h), np.log(values)
    slope, intercept = np.polyfit(x, y, 1)
    residual = np.max(np.abs(y - (slope * x + intercept)))
    return float(slope), float(intercept), float(residual)


def _try_fit(fit, rows, name):
    '''Returns fit(rows), or None with a warning when the rows are degenerate'''
    try:
        return fit(rows)
    except DegenerateFitError as e:
        logger.warning("Study %s: skipping %s: %s", name, fit.__name__, e)
        return None
