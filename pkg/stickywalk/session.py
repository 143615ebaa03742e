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
Provides a session for running convergence studies and dumping their artifacts
"""
import contextlib
import hashlib
import json
import math
import os

from appdirs import user_cache_dir
from filelock import FileLock

import stickywalk
from .errors import ArtifactError, ContractError
from .logging import get_logger
from .metadata import create_study_meta
from .study import ConvergenceRow, StudyReport, conduct_study
from .utils import dump_artifact, format_sig, get_qualname, reraise


logger = get_logger(__name__)

CSV_HEADER = ('h', 'M', 'estimate', 'halfwidth', 'error', 'avg_hits', 'avg_steps', 'wall_time_s')
PLOT_HEADER = ('ln_h', 'ln_error', 'fit_ln_error')


class StudySession(object):
    '''
    A session that runs convergence studies and writes their CSV, plot data and metadata

    Parameters
    ----------
    lock_timeout : float, optional
        Seconds to wait for an artifact lock held by another process; negative waits forever
    lock_dir : str, optional
        Directory of the lock files, by default ``locks`` in the per-user cache directory
    '''

    def __init__(self, lock_timeout=-1, lock_dir=None):
        self.lock_timeout = lock_timeout
        self.lock_dir = lock_dir if lock_dir else os.path.join(user_cache_dir(stickywalk.name), 'locks')

    def run(self, config):
        '''Runs one study and dumps its artifacts. Returns the ``StudyReport``'''
        report = conduct_study(config)
        self.dump(report)
        return report

    def dump(self, report):
        '''
        Writes ``<csv>``, ``<plot>`` and ``<csv stem>.json`` of a study report

        Returns
        -------
        Tuple[str, str, str]
            The written csv, plot data and metadata paths
        '''
        if not isinstance(report, StudyReport):
            raise ContractError("Input `report` must be of type {}".format(get_qualname(StudyReport)))

        csv_path, plot_path = report.config.output_paths()
        meta_path = "{}.json".format(os.path.splitext(csv_path)[0])
        metadata = create_study_meta(report, csv_path, plot_path)
        header = {'scheme': report.config.scheme,
                  'seed': report.config.seed,
                  'variant': report.config.variant,
                  'reference': report.reference,
                  'reference_kind': report.reference_kind}

        with self._locked(csv_path):
            write_csv(report.rows, csv_path)
        with self._locked(plot_path):
            write_plot_data(report.rows, report.fit, plot_path, header=header)
        with self._locked(meta_path):
            dump_artifact(meta_path, data=metadata, module=json, mode='w', indent=2, sort_keys=True)

        for path in (csv_path, plot_path, meta_path):
            logger.info("Wrote %s", path)
        return csv_path, plot_path, meta_path

    @contextlib.contextmanager
    def _locked(self, path):
        '''Holds the lock of `path`; lock files live in the lock directory, never next to artifacts'''
        digest = hashlib.sha1(os.path.abspath(path).encode('utf-8')).hexdigest()
        lock = FileLock(os.path.join(self.lock_dir, "{}.lock".format(digest)), timeout=self.lock_timeout)
        with reraise('Failed to prepare artifact {}', (path, ), error=ArtifactError):
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            os.makedirs(self.lock_dir, exist_ok=True)
            lock.acquire()
        try:
            yield
        finally:
            lock.release()


def format_row(row):
    '''Returns the CSV line of a row, every real with 6 significant digits'''
    if not isinstance(row, ConvergenceRow):
        row = ConvergenceRow(*row)
    return ','.join(format_sig(v) for v in (row.h, int(row.M), row.estimate, row.halfwidth, row.error,
                                             row.avg_hits, row.avg_steps, row.wall_time))


def write_csv(rows, path):
    '''Writes a convergence table as UTF-8 CSV with ``\\n`` line endings'''
    lines = [','.join(CSV_HEADER)]
    lines.extend(format_row(row) for row in rows)
    return dump_artifact(path, data='\n'.join(lines) + '\n', module=None, mode='w')


def write_plot_data(rows, fit, path, header=None):
    '''
    Writes ``ln_h,ln_error,fit_ln_error`` plot data

    The first line is a ``#`` comment holding the `header` items (scheme, seed, variant,
    reference) and the fitted slope. Rows whose error is not positive have no logarithm
    and are left out.
    '''
    header = dict() if header is None else dict(header)
    if fit is not None:
        header['slope'] = fit.slope
        header['intercept'] = fit.intercept
    lines = ['# ' + ' '.join("{}={}".format(k, _format_meta(v)) for k, v in header.items()),
             ','.join(PLOT_HEADER)]
    for row in rows:
        if not row.error > 0:
            continue
        ln_h, ln_error = math.log(row.h), math.log(row.error)
        fitted = float(fit.predict(ln_h)) if fit is not None else float('nan')
        lines.append(','.join(format_sig(v) for v in (ln_h, ln_error, fitted)))
    return dump_artifact(path, data='\n'.join(lines) + '\n', module=None, mode='w')


def _format_meta(value):
    if isinstance(value, float):
        return format_sig(value)
    return value
