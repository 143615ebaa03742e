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
Provides the ``stickywalk`` command line interface
"""
import argparse
import sys

from .config import StudyConfig, apply_env_overrides, load_config, parse_point
from .errors import ConfigError, StickyWalkError
from .logging import get_logger, set_level
from .schemes import SCHEMES, VARIANTS
from .session import StudySession


logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3

# flags that override configuration files, by StudyConfig attribute
_OVERRIDES = ('seed', 'workers', 'variant', 'multiplier')


def build_parser():
    parser = argparse.ArgumentParser(prog='stickywalk',
                                     description='Monte Carlo convergence studies for parabolic problems '
                                                 'with sticky boundary conditions')
    parser.add_argument('--config', help='INI file with one [study] or [study:<name>] section per study')
    parser.add_argument('--problem', default='benchmark', help='registered problem (default: benchmark)')
    parser.add_argument('--scheme', choices=SCHEMES, default=SCHEMES[0])
    parser.add_argument('--h', type=float, nargs='+', help='step sizes')
    parser.add_argument('--samples', type=int, nargs='+',
                        help='sample counts, one per step size or a single count for all')
    parser.add_argument('--seed', type=int)
    parser.add_argument('--workers', type=int)
    parser.add_argument('--variant', choices=VARIANTS)
    parser.add_argument('--multiplier', type=float, help='confidence halfwidth multiplier (default: 2)')
    parser.add_argument('--radius', type=float, default=1.25)
    parser.add_argument('--constant', type=float, default=10.0, help='value of the constant problem')
    parser.add_argument('--t0', type=float, default=0.0)
    parser.add_argument('--x0', default='0,1', help='comma-separated evaluation point (default: 0,1)')
    parser.add_argument('--reference', type=float, help='reference value when the problem has no exact solution')
    parser.add_argument('--out', help='CSV output path')
    parser.add_argument('--plot', help='plot data output path')
    parser.add_argument('--no-timing', action='store_true', help='write wall times as 0 for reproducible files')
    parser.add_argument('--log-level', default='INFO')
    return parser


def configs_from_args(args, environ=None):
    '''Returns the validated study configurations selected by parsed arguments'''
    if args.config:
        configs = load_config(args.config, environ)
        if len(configs) > 1 and (args.out or args.plot):
            raise ConfigError('--out and --plot cannot be combined with a multi-study configuration')
    else:
        configs = [_inline_config(args)]
        apply_env_overrides(configs[0], environ)

    for config in configs:
        for key in _OVERRIDES:
            value = getattr(args, key)
            if value is not None:
                setattr(config, key, value)
        if args.no_timing:
            config.timing = False
        if args.out:
            config.csv = args.out
        if args.plot:
            config.plot = args.plot
        config.validate()
    return configs


def _inline_config(args):
    if not args.h:
        raise ConfigError('Either --config or --h is required')
    samples = args.samples or [10000]
    if len(samples) == 1:
        samples = samples * len(args.h)
    if len(samples) != len(args.h):
        raise ConfigError("--samples has {} values for {} step sizes".format(len(samples), len(args.h)))
    return StudyConfig(problem=args.problem, radius=args.radius, constant=args.constant, t0=args.t0,
                       x0=parse_point(args.x0, '--x0'), scheme=args.scheme, grid=list(zip(args.h, samples)),
                       reference=args.reference)


def main(argv=None, environ=None):
    '''Runs the command line interface and returns the exit code'''
    args = build_parser().parse_args(argv)
    try:
        set_level(args.log_level)
    except ValueError:
        logger.error("Unknown log level '%s'", args.log_level)
        return EXIT_CONFIG

    try:
        configs = configs_from_args(args, environ)
        session = StudySession()
        for config in configs:
            report = session.run(config)
            if report.fit is not None:
                logger.info("%s: empirical order %.3f", config.name, report.fit.slope)
    except ConfigError as e:
        logger.error("Configuration error: %s", e)
        return EXIT_CONFIG
    except StickyWalkError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
