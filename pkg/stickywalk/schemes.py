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
Provides the sticky Euler and projected Euler chains

Both chains are implemented once, as batch steps over arrays of chains
(``sticky_batch_step``, ``projected_batch_step``). The single-trajectory
operations wrap a batch of one, and ``simulate_block`` drives a fixed block of
trajectory indices to termination for the Monte Carlo estimator.
"""
from collections import namedtuple
from enum import IntEnum
from functools import partial

import numpy as np

from .errors import ContractError, PreconditionError, RunawayError, StickyWalkError, TrajectoryError
from .streams import rademacher_block, stream_keys


STICKY_EULER = 'sticky-euler'
PROJECTED_EULER = 'projected-euler'
SCHEMES = (STICKY_EULER, PROJECTED_EULER)

# final-step correction of a boundary excursion whose sticky time crosses T
LISTING = 'listing'
PROOF = 'proof'
BALANCED = 'balanced'
VARIANTS = (LISTING, PROOF, BALANCED)
DEFAULT_VARIANT = BALANCED

RUNAWAY_FACTOR = 10
TIME_TOLERANCE = 1e-9  # relative to h; ties toward T terminate


class Case(IntEnum):
    '''Branch taken by one sticky Euler step'''
    I = 1  # noqa: E741  interior, before T
    II = 2  # interior, reaches T
    IIIA = 3  # boundary excursion, sticky time ends before T
    IIIB = 4  # boundary excursion, sticky time crosses T
    IV = 5  # boundary excursion on the final step


FINAL_CASES = frozenset((Case.II, Case.IIIB, Case.IV))
BOUNDARY_CASES = frozenset((Case.IIIA, Case.IIIB, Case.IV))
_FINAL_CODES = np.array(sorted(int(c) for c in FINAL_CASES))
_BOUNDARY_CODES = np.array(sorted(int(c) for c in BOUNDARY_CASES))


class ChainState(namedtuple('ChainState', 't x y z hits steps')):
    '''Time, position, multiplicative weight Y, accumulator Z and counters of one chain'''


class AuxState(namedtuple('AuxState', 't x y z')):
    '''Unconstrained Euler proposal of one chain'''


class TrajectoryResult(namedtuple('TrajectoryResult', 't x y z steps hits')):
    '''Terminal state of one chain with its step count and boundary-hit count'''


Continue = namedtuple('Continue', 'state case')
Terminated = namedtuple('Terminated', 'result case')

StickyUpdate = namedtuple('StickyUpdate', 't x y z case distance p')
ProjectedUpdate = namedtuple('ProjectedUpdate', 't x y z hit distance')
BlockResult = namedtuple('BlockResult', 'payoffs hits steps')


def nominal_steps(horizon, t0, h):
    '''
    Returns floor((T - t0) / h)

    This bounds the step count of a sticky Euler chain only when h divides T - t0; otherwise
    a chain without excursions takes ceil((T - t0) / h) steps.
    '''
    return int(np.floor((horizon - t0) / h + TIME_TOLERANCE))


def step_budget(horizon, t0, h):
    '''Returns the number of steps after which a chain is declared runaway'''
    return RUNAWAY_FACTOR * max(nominal_steps(horizon, t0, h), 1)


def rademacher_vector(stream, d):
    '''Returns the next vector of d independent +/-1 components of `stream`'''
    if d < 1:
        raise ContractError("Rademacher vectors need d >= 1, not {}".format(d))
    return stream.draw(d)


def initial_state(problem, t0, x0):
    '''Returns the chain state (t0, x0, Y=1, Z=0) after checking it is admissible'''
    x0 = np.array(x0, dtype=float).reshape(-1)
    if x0.size != problem.dim:
        raise ContractError("Initial point has dimension {}, expected {}".format(x0.size, problem.dim))
    if not t0 < problem.horizon:
        raise PreconditionError("Initial time {} must precede the horizon {}".format(t0, problem.horizon))
    if not problem.domain.contains(x0):
        raise PreconditionError("Initial point {} is not interior to {}".format(x0.tolist(), problem.domain))
    return ChainState(float(t0), x0, 1.0, 0.0, 0, 0)


def euler_aux_step(state, problem, h, xi):
    '''Returns the Euler proposal (t + h, X + h b + sqrt(h) sigma xi, Y + h c Y, Z + h g Y)'''
    _check_step(h)
    t, x, y, z, xi = _lift(problem, state, xi)
    t_aux, x_aux, y_aux, z_aux = _euler(problem, t, x, y, z, h, xi)
    return AuxState(float(t_aux[0]), x_aux[0], float(y_aux[0]), float(z_aux[0]))


def sticky_step(state, problem, h, xi, variant=DEFAULT_VARIANT):
    '''
    Advances one sticky Euler chain by one step

    Returns ``Continue(state, case)`` or ``Terminated(result, case)``.
    '''
    _check_step(h)
    if not state.t < problem.horizon:
        raise PreconditionError("Sticky Euler step requires t < T, got t = {}".format(state.t))
    if problem.domain.exterior(state.x):
        raise PreconditionError("Sticky Euler step requires a state in the closed domain")

    update = sticky_batch_step(problem, *_lift(problem, state, xi), h=h, variant=variant)
    case = Case(int(update.case[0]))
    hits = state.hits + int(case in BOUNDARY_CASES)
    steps = state.steps + 1
    t, x, y, z = float(update.t[0]), update.x[0], float(update.y[0]), float(update.z[0])

    if case in FINAL_CASES:
        return Terminated(TrajectoryResult(t, x, y, z, steps=steps, hits=hits), case)
    return Continue(ChainState(t, x, y, z, hits=hits, steps=steps), case)


def sticky_trajectory(problem, t0, x0, h, stream, variant=DEFAULT_VARIANT):
    '''Runs one sticky Euler chain from (t0, x0) until it terminates at T'''
    _check_step(h)
    state = initial_state(problem, t0, x0)
    budget = step_budget(problem.horizon, t0, h)
    while state.steps < budget:
        outcome = sticky_step(state, problem, h, rademacher_vector(stream, problem.dim), variant)
        if isinstance(outcome, Terminated):
            return outcome.result
        state = outcome.state
    raise RunawayError("Sticky Euler chain exceeded its budget of {} steps".format(budget))


def projected_step(state, problem, h, xi):
    '''Advances one projected Euler chain by one step and returns the new ``ChainState``'''
    _check_step(h)
    if not state.t <= problem.horizon:
        raise PreconditionError("Projected Euler step requires t <= T, got t = {}".format(state.t))

    update = projected_batch_step(problem, *_lift(problem, state, xi), h=h)
    return ChainState(float(update.t[0]), update.x[0], float(update.y[0]), float(update.z[0]),
                      hits=state.hits + int(update.hit[0]), steps=state.steps + 1)


def projected_trajectory(problem, t0, x0, h, stream):
    '''Runs one projected Euler chain from (t0, x0) while t <= T; the exit time may overshoot T'''
    _check_step(h)
    state = initial_state(problem, t0, x0)
    budget = step_budget(problem.horizon, t0, h)
    while state.t <= problem.horizon:
        if state.steps >= budget:
            raise RunawayError("Projected Euler chain exceeded its budget of {} steps".format(budget))
        state = projected_step(state, problem, h, rademacher_vector(stream, problem.dim))
    return TrajectoryResult(state.t, state.x, state.y, state.z, steps=state.steps, hits=state.hits)


def payoff(result, problem):
    '''Returns phi(X) Y + Z of a terminal state; phi is evaluated by its formula even slightly outside G'''
    x = np.asarray(result.x, dtype=float).reshape(1, -1)
    return float(problem.terminal(x)[0] * result.y + result.z)


def payoff_batch(problem, x, y, z):
    '''Returns phi(X) Y + Z for arrays of terminal states'''
    return problem.terminal(x) * y + z


def sticky_batch_step(problem, t, x, y, z, xi, h, variant=DEFAULT_VARIANT):
    '''
    Advances a batch of sticky Euler chains by one step

    Parameters
    ----------
    problem : ``stickywalk.problem.Problem``
    t, y, z : numpy.ndarray
        Shape (n,) times, weights and accumulators, with t < T
    x : numpy.ndarray
        Shape (n, d) positions in the closed domain
    xi : numpy.ndarray
        Shape (n, d) +/-1 increments
    h : float
        Step size in (0, 1)
    variant : str, optional
        Final-step correction used when the sticky time crosses T: 'listing', 'proof' or 'balanced'

    Returns
    -------
    ``StickyUpdate`` with the new (t, x, y, z), the ``Case`` code of every chain, the
    excursion distance r (0 without excursion) and the truncation p (nan unless Case IIIB).
    '''
    if variant not in VARIANTS:
        raise ContractError("Unknown final-step correction '{}'; choose one of {}".format(variant, VARIANTS))

    horizon = problem.horizon
    domain = problem.domain
    tol = TIME_TOLERANCE * h

    t_aux, x_aux, y_aux, z_aux = _euler(problem, t, x, y, z, h, xi)
    late = t_aux >= horizon - tol
    case = np.where(late, int(Case.II), int(Case.I)).astype(np.int8)
    t_new = np.where(late, horizon, t_aux)
    x_new, y_new, z_new = x_aux.copy(), y_aux.copy(), z_aux.copy()
    distance = np.zeros(len(t_aux))
    p = np.full(len(t_aux), np.nan)

    outside = np.flatnonzero(domain.exterior(x_aux))
    if outside.size:
        foot, r, nu = domain.project_to_boundary(x_aux[outside])
        mu = problem.stickiness(foot)
        t_check = t_aux[outside] + 2 * r * mu
        assert np.all(t_check >= t_aux[outside]), 'sticky time must be nonnegative'

        x_new[outside] = domain.settle(x_aux[outside] + 2 * r[:, None] * nu, nu)
        distance[outside] = r
        y_prev = y[outside]
        final_exit = late[outside]
        sticky = ~final_exit & (t_check < horizon - tol)
        crossing = ~final_exit & ~sticky

        if np.any(sticky):
            rows, rs, ms, ys = outside[sticky], r[sticky], mu[sticky], y_prev[sticky]
            gamma, c, psi, g = _boundary_coefficients(problem, t_aux[rows] + rs * ms, foot[sticky])
            y_new[rows] = y_aux[rows] + ys * (2 * rs * gamma + 2 * rs * ms * c
                                              + 2 * rs ** 2 * gamma ** 2
                                              + 4 * rs ** 2 * ms * gamma * c
                                              + 2 * rs ** 2 * ms ** 2 * c ** 2)
            z_new[rows] = z_aux[rows] + ys * (-2 * rs * psi
                                              - 2 * rs ** 2 * gamma * psi
                                              - 2 * rs ** 2 * ms * c * psi
                                              + 2 * rs * ms * g
                                              + 2 * rs ** 2 * ms * gamma * g
                                              + 2 * rs ** 2 * ms ** 2 * c * g)
            t_new[rows] = t_check[sticky]
            case[rows] = Case.IIIA

        if np.any(crossing):
            rows, rs, ms, ys = outside[crossing], r[crossing], mu[crossing], y_prev[crossing]
            fs = foot[crossing]
            t_end = np.full(rows.size, horizon)
            pk = np.clip((horizon - t_aux[rows]) / (2 * ms), 0.0, rs)
            dy, dz = _crossing_increments(problem, variant, t_end, fs, rs, ms, pk)
            y_new[rows] = y_aux[rows] + ys * dy
            z_new[rows] = z_aux[rows] + ys * dz
            p[rows] = pk
            t_new[rows] = horizon
            case[rows] = Case.IIIB

        if np.any(final_exit):
            rows, rs, ms, ys = outside[final_exit], r[final_exit], mu[final_exit], y_prev[final_exit]
            fs = foot[final_exit]
            t_end = np.full(rows.size, horizon)
            gamma, _, psi, _ = _boundary_coefficients(problem, t_end, fs)
            a_phi = problem.generator_of_terminal(t_end, fs)
            y_new[rows] = y_aux[rows] + ys * (2 * rs * gamma + 2 * rs ** 2 * gamma ** 2)
            z_new[rows] = z_aux[rows] + ys * (-2 * rs * ms * a_phi
                                              - 2 * rs ** 2 * gamma * ms * a_phi
                                              - 2 * rs * psi
                                              - 2 * rs ** 2 * gamma * psi)
            case[rows] = Case.IV

    return StickyUpdate(t_new, x_new, y_new, z_new, case, distance, p)


def projected_batch_step(problem, t, x, y, z, xi, h):
    '''
    Advances a batch of projected Euler chains by one step

    Chains in the closed domain take an Euler step of size h; exterior chains move to
    their boundary projection and advance time by r mu(foot). New times within
    rounding of T are set to T, so every step grid reaches T the same way.
    '''
    domain = problem.domain
    outside = domain.exterior(x)
    t_new, x_new, y_new, z_new = (np.array(a, dtype=float) for a in (t, x, y, z))
    distance = np.zeros(len(t_new))

    inside = np.flatnonzero(~outside)
    if inside.size:
        t_aux, x_aux, y_aux, z_aux = _euler(problem, t_new[inside], x_new[inside], y_new[inside],
                                            z_new[inside], h, xi[inside])
        t_new[inside], x_new[inside], y_new[inside], z_new[inside] = t_aux, x_aux, y_aux, z_aux

    exits = np.flatnonzero(outside)
    if exits.size:
        t_old, y_old = t_new[exits], y_new[exits]
        foot, r, _ = domain.project_to_boundary(x_new[exits])
        mu = problem.stickiness(foot)
        gamma, c, psi, g = _boundary_coefficients(problem, t_old, foot)
        t_new[exits] = t_old + r * mu
        x_new[exits] = foot
        y_new[exits] = y_old + r * gamma * y_old + r * mu * c * y_old
        z_new[exits] = z_new[exits] - r * psi * y_old + r * mu * g * y_old
        distance[exits] = r

    # rounding ties land exactly on T
    t_new[np.abs(t_new - problem.horizon) <= TIME_TOLERANCE * h] = problem.horizon
    return ProjectedUpdate(t_new, x_new, y_new, z_new, outside, distance)


def simulate_block(problem, scheme, t0, x0, h, seed, start, count, variant=DEFAULT_VARIANT):
    '''
    Runs trajectories ``start .. start + count - 1`` of `seed` to termination

    Trajectory i draws its increments from its own counter-based stream, so the
    result of a trajectory does not depend on the block it is simulated in.
    '''
    _check_scheme(scheme)
    _check_step(h)
    state = initial_state(problem, t0, x0)
    d = problem.dim

    keys = stream_keys(seed, np.arange(start, start + count, dtype=np.uint64))
    t = np.full(count, state.t)
    x = np.tile(state.x, (count, 1))
    y = np.ones(count)
    z = np.zeros(count)
    final_x, final_y, final_z = np.empty_like(x), np.empty(count), np.empty(count)
    hits = np.zeros(count, dtype=np.int64)
    steps = np.zeros(count, dtype=np.int64)

    advance = partial(_advance, problem, scheme, h, variant)
    budget = step_budget(problem.horizon, t0, h)
    live = np.arange(count)
    counter = 0
    while live.size:
        if counter >= budget:
            raise TrajectoryError(start + int(live[0]),
                                  "RunawayError: exceeded the budget of {} steps".format(budget))
        xi = rademacher_block(keys[live], counter, d)
        try:
            update, hit, done = advance(t, x, y, z, xi)
        except (StickyWalkError, AssertionError) as e:
            offender = _locate_failure(advance, t, x, y, z, xi)
            raise TrajectoryError(start + int(live[offender]), "{}: {}".format(type(e).__name__, e))

        hits[live] += hit
        steps[live] += 1
        finished = live[done]
        final_x[finished], final_y[finished], final_z[finished] = update.x[done], update.y[done], update.z[done]

        keep = ~done
        live = live[keep]
        t, x, y, z = update.t[keep], update.x[keep], update.y[keep], update.z[keep]
        counter += 1

    return BlockResult(payoff_batch(problem, final_x, final_y, final_z), hits, steps)


def _advance(problem, scheme, h, variant, t, x, y, z, xi):
    '''Returns (update, hit mask, terminated mask) of one batch step'''
    if scheme == STICKY_EULER:
        update = sticky_batch_step(problem, t, x, y, z, xi, h=h, variant=variant)
        return update, np.isin(update.case, _BOUNDARY_CODES), np.isin(update.case, _FINAL_CODES)
    update = projected_batch_step(problem, t, x, y, z, xi, h=h)
    return update, update.hit, update.t > problem.horizon


def _locate_failure(advance, t, x, y, z, xi):
    '''Returns the position of the first chain whose step fails on its own'''
    for i in range(len(t)):
        window = slice(i, i + 1)
        try:
            advance(t[window], x[window], y[window], z[window], xi[window])
        except (StickyWalkError, AssertionError):
            return i
    return 0


def _euler(problem, t, x, y, z, h, xi):
    '''Euler proposal for batches'''
    b = problem.drift(t, x)
    sigma = problem.diffusion(t, x)
    x_aux = x + h * b + np.sqrt(h) * np.einsum('nij,nj->ni', sigma, xi)
    return t + h, x_aux, y + h * problem.potential(t, x) * y, z + h * problem.source(t, x) * y


def _boundary_coefficients(problem, t, foot):
    '''Returns gamma, c, psi, g at (t, foot)'''
    return (problem.absorption(t, foot), problem.potential(t, foot),
            problem.boundary(t, foot), problem.source(t, foot))


def _crossing_increments(problem, variant, t_end, foot, r, mu, p):
    '''Returns the Y and Z increments (per unit Y) when the sticky time crosses T'''
    gamma, c, psi, g = _boundary_coefficients(problem, t_end, foot)
    a_phi = problem.generator_of_terminal(t_end, foot)
    lost = -2 * mu * (r - p) * a_phi - 2 * r * psi

    if variant == LISTING:
        return 2 * r * gamma - 2 * p * mu * c, lost - 2 * p * mu * g
    if variant == PROOF:
        phi = problem.terminal(foot)
        return 2 * r * gamma + 2 * p * mu * c, lost + 2 * p * mu * c * phi + 2 * p * mu * g
    return 2 * r * gamma + 2 * p * mu * c, lost + 2 * p * mu * g


def _lift(problem, state, xi):
    '''Returns a single chain as a batch of one'''
    d = problem.dim
    x = np.asarray(state.x, dtype=float).reshape(-1)
    xi = np.asarray(xi, dtype=float).reshape(-1)
    if x.size != d or xi.size != d:
        raise ContractError("State and increment must have dimension {}, got {} and {}".format(d, x.size, xi.size))
    return (np.array([state.t], dtype=float), x.reshape(1, d), np.array([state.y], dtype=float),
            np.array([state.z], dtype=float), xi.reshape(1, d))


def _check_step(h):
    if not 0 < h < 1:
        raise ContractError("Step size must lie in (0, 1), not {}".format(h))


def _check_scheme(scheme):
    if scheme not in SCHEMES:
        raise ContractError("Unknown scheme '{}'; choose one of {}".format(scheme, SCHEMES))
