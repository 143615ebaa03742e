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
Provides the Monte Carlo estimator of u(t0, x0)

Trajectories are simulated in fixed-size blocks of consecutive indices. Payoffs are
concatenated in block order and reduced with compensated summation, so an estimate
depends on the seed but never on the number of workers.
"""
import math
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .errors import ContractError
from .logging import get_logger
from .pickler import dumps_problem, loads_problem
from .schemes import DEFAULT_VARIANT, SCHEMES, VARIANTS, initial_state, simulate_block


logger = get_logger(__name__)

DEFAULT_MULTIPLIER = 2.0
BLOCK_SIZE = 4096

_worker_problem = None


class Estimate(namedtuple('Estimate', 'mean variance halfwidth samples avg_hits avg_steps scheme h seed variant')):
    '''Mean payoff, sample variance D_M, confidence halfwidth and diagnostics of one Monte Carlo run'''


def confidence_halfwidth(variance, samples, k=DEFAULT_MULTIPLIER):
    '''Returns k * sqrt(variance / samples)'''
    if samples < 1:
        raise ContractError("Sample count must be at least 1, not {}".format(samples))
    if variance < 0:
        raise ContractError("Variance must be nonnegative, not {}".format(variance))
    return k * math.sqrt(variance / samples)


def plan_blocks(samples, block_size=BLOCK_SIZE):
    '''Returns (start, count) pairs covering trajectory indices 0 .. samples - 1'''
    return [(start, min(block_size, samples - start)) for start in range(0, samples, block_size)]


def sample_statistics(payoffs):
    '''Returns the mean and the unbiased sample variance (0 for a single sample) of `payoffs`'''
    payoffs = np.asarray(payoffs, dtype=float)
    mean = math.fsum(payoffs) / payoffs.size
    if payoffs.size < 2:
        return mean, 0.0
    return mean, math.fsum((payoffs - mean) ** 2) / (payoffs.size - 1)


def estimate(problem, scheme, t0, x0, h, samples, seed=0, workers=1, multiplier=DEFAULT_MULTIPLIER,
             variant=DEFAULT_VARIANT, block_size=BLOCK_SIZE):
    '''
    Estimates u(t0, x0) by the mean of `samples` independent payoffs

    Parameters
    ----------
    problem : ``stickywalk.problem.Problem``
    scheme : str
        'sticky-euler' or 'projected-euler'
    t0, x0 : float, array-like
        Evaluation point; x0 must be interior
    h : float
        Step size in (0, 1)
    samples : int
        Number of trajectories M
    seed : int, optional
        Stream seed; trajectory i draws from the stream of (seed, i)
    workers : int, optional
        Number of worker processes; 1 simulates in-process
    multiplier : float, optional
        Halfwidth multiplier k
    variant : str, optional
        Final-step correction of the sticky Euler scheme
    block_size : int, optional
        Trajectories per block

    Returns
    -------
    ``Estimate``
    '''
    _check_inputs(problem, scheme, t0, x0, samples, workers, variant, block_size)
    blocks = plan_blocks(samples, block_size)
    tasks = [(scheme, t0, x0, h, seed, start, count, variant) for start, count in blocks]
    logger.debug("Simulating %d trajectories of %s in %d blocks on %d worker(s)",
                 samples, scheme, len(blocks), workers)

    if workers == 1 or len(blocks) == 1:
        results = [simulate_block(problem, *task) for task in tasks]
    else:
        payload = dumps_problem(problem)
        with ProcessPoolExecutor(max_workers=min(workers, len(blocks)), initializer=_init_worker,
                                 initargs=(payload, )) as ex:
            results = list(ex.map(_run_block, tasks))

    payoffs = np.concatenate([r.payoffs for r in results])
    hits = np.concatenate([r.hits for r in results])
    steps = np.concatenate([r.steps for r in results])

    mean, variance = sample_statistics(payoffs)
    return Estimate(mean=mean,
                    variance=variance,
                    halfwidth=confidence_halfwidth(variance, samples, multiplier),
                    samples=samples,
                    avg_hits=math.fsum(hits) / samples,
                    avg_steps=math.fsum(steps) / samples,
                    scheme=scheme,
                    h=h,
                    seed=seed,
                    variant=variant)


def _init_worker(payload):
    '''Pool initializer; deserialises the problem once per worker'''
    global _worker_problem
    _worker_problem = loads_problem(payload)


def _run_block(task):
    return simulate_block(_worker_problem, *task)


def _check_inputs(problem, scheme, t0, x0, samples, workers, variant, block_size):
    '''Raises if inputs are invalid'''
    if scheme not in SCHEMES:
        raise ContractError("Unknown scheme '{}'; choose one of {}".format(scheme, SCHEMES))
    if variant not in VARIANTS:
        raise ContractError("Unknown final-step correction '{}'; choose one of {}".format(variant, VARIANTS))
    if samples < 1:
        raise ContractError("Sample count must be at least 1, not {}".format(samples))
    if workers < 1:
        raise ContractError("Worker count must be at least 1, not {}".format(workers))
    if block_size < 1:
        raise ContractError("Block size must be at least 1, not {}".format(block_size))
    initial_state(problem, t0, x0)
