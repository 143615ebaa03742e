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
Provides study metadata generation utilities
"""
import sys
from importlib.metadata import PackageNotFoundError, version

import stickywalk


SCHEMA_VERSION = '0.1.0'
_SCHEMA = "stickywalk.schema.study:{}".format(SCHEMA_VERSION)
_DEPENDENCIES = ('numpy', 'dill', 'appdirs', 'filelock')


def create_study_meta(report, csv_path, plot_path):
    '''Returns a study metadata dictionary'''
    config = report.config
    return {'schema': _SCHEMA,
            'runtime': _create_runtime(),
            'name': config.name,
            'study': {'problem': config.problem,
                      'radius': config.radius,
                      'constant': config.constant if config.problem == 'constant' else None,
                      't0': config.t0,
                      'x0': list(config.x0),
                      'scheme': config.scheme,
                      'variant': config.variant,
                      'grid': [{'h': h, 'M': m} for h, m in config.grid],
                      'seed': config.seed,
                      'multiplier': config.multiplier,
                      'timing': config.timing},
            'reference': {'value': report.reference, 'kind': report.reference_kind},
            'fit': None if report.fit is None else report.fit._asdict(),
            'hit_fit': None if report.hit_fit is None else report.hit_fit._asdict(),
            'artifacts': {'csv': csv_path, 'plot': plot_path}}


def _create_runtime():
    '''Returns a runtime dict'''
    return {'name': 'python',
            'version': '.'.join(map(str, sys.version_info[:3])),
            'package': {'name': stickywalk.name, 'version': stickywalk.__version__},
            'dependencies': [{'name': n, 'version': _get_version(n)} for n in _DEPENDENCIES]}


def _get_version(req_name):
    '''Returns the installed version of a distribution, or None if it is not installed'''
    try:
        return version(req_name)
    except PackageNotFoundError:
        return None
