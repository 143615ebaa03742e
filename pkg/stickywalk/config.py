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
Provides convergence study configuration

A configuration file is INI-style. Every section named ``study`` or ``study:<name>``
describes one study::

    [study:sticky]
    problem = benchmark
    scheme = sticky-euler
    grid = 0.125:100000, 0.0625:100000, 0.0125:100000
    seed = 7
    csv = out/sticky.csv
"""
import configparser
import os

from appdirs import user_data_dir

import stickywalk
from .errors import ConfigError, StickyWalkError
from .problem import BENCHMARK_POINT, BENCHMARK_RADIUS, PROBLEMS, make_problem
from .schemes import DEFAULT_VARIANT, SCHEMES, STICKY_EULER, VARIANTS, initial_state
from .utils import reraise


SECTION = 'study'
ENV_SEED = 'STICKYWALK_SEED'
ENV_WORKERS = 'STICKYWALK_WORKERS'

_KEYS = frozenset(('problem', 'radius', 'constant', 't0', 'x0', 'scheme', 'grid', 'seed', 'workers',
                   'multiplier', 'variant', 'reference', 'timing', 'csv', 'plot'))


class StudyConfig(object):
    '''
    Parameters of one convergence study

    Parameters
    ----------
    name : str
        Study name; also the field path prefix in error messages and the default output stem
    problem : str, optional
        Registered problem name ('benchmark' or 'constant')
    radius : float, optional
        Radius of the disk domain
    constant : float, optional
        Solution value of the constant problem
    t0 : float, optional
        Evaluation time
    x0 : Sequence[float], optional
        Evaluation point; must be interior
    scheme : str, optional
        'sticky-euler' or 'projected-euler'
    grid : Sequence[Tuple[float, int]], optional
        (h, M) pairs, one convergence row each
    seed : int, optional
        Stream seed shared by every row
    workers : int, optional
        Worker processes of the estimator
    multiplier : float, optional
        Halfwidth multiplier k
    variant : str, optional
        Final-step correction of the sticky Euler scheme ('listing', 'proof' or 'balanced')
    reference : float, optional
        Reference value for problems without an exact solution
    timing : bool, optional
        If False, wall times are written as 0 so that output files are reproducible byte for byte
    csv, plot : str, optional
        Output paths; default to ``<user data dir>/<name>.csv`` and ``<name>.plot.dat``
    '''

    __slots__ = ('name', 'problem', 'radius', 'constant', 't0', 'x0', 'scheme', 'grid', 'seed', 'workers',
                 'multiplier', 'variant', 'reference', 'timing', 'csv', 'plot')

    def __init__(self, name=SECTION, problem='benchmark', radius=BENCHMARK_RADIUS, constant=10.0,
                 t0=BENCHMARK_POINT[0], x0=BENCHMARK_POINT[1], scheme=STICKY_EULER, grid=(), seed=0,
                 workers=1, multiplier=2.0, variant=DEFAULT_VARIANT, reference=None, timing=True,
                 csv=None, plot=None):
        self.name = name
        self.problem = problem
        self.radius = radius
        self.constant = constant
        self.t0 = t0
        self.x0 = tuple(x0)
        self.scheme = scheme
        self.grid = [tuple(pair) for pair in grid]
        self.seed = seed
        self.workers = workers
        self.multiplier = multiplier
        self.variant = variant
        self.reference = reference
        self.timing = timing
        self.csv = csv
        self.plot = plot

    def __repr__(self):
        return "StudyConfig({})".format(', '.join("{}={!r}".format(k, getattr(self, k)) for k in self.__slots__))

    def build_problem(self):
        '''Returns the configured problem'''
        with reraise('{}.radius', (self.name, ), error=ConfigError):
            return make_problem(self.problem, radius=self.radius, constant=self.constant)

    def output_paths(self):
        '''Returns the (csv, plot) paths, defaulting into the per-user data directory'''
        stem = self.name.replace(':', '-')
        data_dir = user_data_dir(stickywalk.name)
        csv = self.csv if self.csv else os.path.join(data_dir, "{}.csv".format(stem))
        plot = self.plot if self.plot else "{}.plot.dat".format(os.path.splitext(csv)[0])
        return csv, plot

    def validate(self):
        '''Raises ConfigError naming the offending field path if the configuration is invalid'''
        if self.problem not in PROBLEMS:
            self._fail('problem', "unknown problem '{}'; choose one of {}".format(self.problem, sorted(PROBLEMS)))
        if self.scheme not in SCHEMES:
            self._fail('scheme', "unknown scheme '{}'; choose one of {}".format(self.scheme, SCHEMES))
        if self.variant not in VARIANTS:
            self._fail('variant', "unknown variant '{}'; choose one of {}".format(self.variant, VARIANTS))
        if not self.grid:
            self._fail('grid', 'at least one (h, M) pair is required')
        for i, (h, samples) in enumerate(self.grid):
            if not 0 < h < 1:
                self._fail("grid[{}].h".format(i), "step size must lie in (0, 1), not {}".format(h))
            if not samples >= 1:
                self._fail("grid[{}].M".format(i), "sample count must be at least 1, not {}".format(samples))
        if not self.seed >= 0:
            self._fail('seed', "seed must be nonnegative, not {}".format(self.seed))
        if not self.workers >= 1:
            self._fail('workers', "worker count must be at least 1, not {}".format(self.workers))
        if not self.multiplier > 0:
            self._fail('multiplier', "halfwidth multiplier must be positive, not {}".format(self.multiplier))

        problem = self.build_problem()
        if not self.t0 < problem.horizon:
            self._fail('t0', "evaluation time must precede the horizon {}, not {}".format(problem.horizon, self.t0))
        try:
            initial_state(problem, self.t0, self.x0)
        except StickyWalkError as e:
            self._fail('x0', e)
        return self

    def _fail(self, field, message):
        raise ConfigError("{}.{}: {}".format(self.name, field, message))


def load_config(path, environ=None):
    '''
    Returns the validated study configurations of an INI file

    Parameters
    ----------
    path : str
        Configuration file path
    environ : Mapping[str, str], optional
        Environment used for seed and worker overrides; defaults to ``os.environ``
    '''
    parser = configparser.ConfigParser()
    with reraise('Cannot read configuration {}', (path, ), error=ConfigError):
        with open(path, encoding='utf-8') as f:
            parser.read_file(f)

    sections = [s for s in parser.sections() if s == SECTION or s.startswith(SECTION + ':')]
    if not sections:
        raise ConfigError("Configuration {} defines no [{}] section".format(path, SECTION))

    configs = [parse_section(name, parser[name]) for name in sections]
    for config in configs:
        apply_env_overrides(config, environ)
        config.validate()
    return configs


def parse_section(name, section):
    '''Returns the StudyConfig described by one INI section'''
    unknown = set(section) - _KEYS
    if unknown:
        raise ConfigError("{}: unknown keys {}".format(name, sorted(unknown)))

    kwargs = dict()
    for key in ('problem', 'scheme', 'variant', 'csv', 'plot'):
        if key in section:
            kwargs[key] = section[key].strip()
    for key in ('radius', 'constant', 't0', 'multiplier'):
        if key in section:
            kwargs[key] = _parse_value(name, key, section[key], float)
    for key in ('seed', 'workers'):
        if key in section:
            kwargs[key] = _parse_value(name, key, section[key], int)
    if 'x0' in section:
        kwargs['x0'] = parse_point(section['x0'], "{}.x0".format(name))
    if 'grid' in section:
        kwargs['grid'] = parse_grid(section['grid'], "{}.grid".format(name))
    if section.get('reference', '').strip():
        kwargs['reference'] = _parse_value(name, 'reference', section['reference'], float)
    if 'timing' in section:
        with reraise('{}.timing', (name, ), error=ConfigError):
            kwargs['timing'] = section.getboolean('timing')
    return StudyConfig(name, **kwargs)


def parse_grid(text, field='grid'):
    '''Parses ``h:M, h:M, ...`` into a list of (float, int) pairs'''
    grid = []
    for i, item in enumerate(filter(None, (s.strip() for s in text.split(',')))):
        h, sep, samples = item.partition(':')
        if not sep:
            raise ConfigError("{}[{}]: expected 'h:M', got '{}'".format(field, i, item))
        with reraise('{}[{}].h', (field, i), error=ConfigError):
            h = float(h)
        with reraise('{}[{}].M', (field, i), error=ConfigError):
            samples = int(samples)
        grid.append((h, samples))
    return grid


def parse_point(text, field='x0'):
    '''Parses a comma-separated point'''
    with reraise('{}', (field, ), error=ConfigError):
        return tuple(float(v) for v in text.split(','))


def apply_env_overrides(config, environ=None):
    '''Overrides seed and workers from STICKYWALK_SEED and STICKYWALK_WORKERS'''
    environ = os.environ if environ is None else environ
    for var, key in ((ENV_SEED, 'seed'), (ENV_WORKERS, 'workers')):
        value = environ.get(var)
        if value:
            with reraise('{} (from {})', (key, var), error=ConfigError):
                setattr(config, key, int(value))
    return config


def _parse_value(name, key, text, type_):
    with reraise('{}.{}', (name, key), error=ConfigError):
        return type_(text.strip())
