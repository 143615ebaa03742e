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
Provides PDE problem bundles, the generator, and the built-in manufactured problems

Coefficient callables are evaluated on batches: ``t`` is a scalar or an array of
shape (n,), ``x`` and ``z`` have shape (n, d). Drift returns (n, d), diffusion
returns (n, d, d), every scalar coefficient returns (n,). The reflection weight
in front of the normal derivative is fixed to one.
"""
from collections import namedtuple
from functools import partial

import numpy as np

from .errors import ConfigError, ContractError, UnsupportedOperationError
from .geometry import Ball, Domain
from .utils import get_qualname


BENCHMARK_RADIUS = 1.25
BENCHMARK_POINT = (0.0, (0.0, 1.0))
FD_STEP = 1e-4
_SYMMETRY_TOLERANCE = 1e-9
_SQRT3 = np.sqrt(3.0)


class ExactSolution(namedtuple('ExactSolution', 'value gradient hessian time_derivative')):
    '''Analytic solution u(t, x) with its spatial gradient, Hessian and time derivative'''


class Problem(object):
    '''
    Coefficients and data of a linear parabolic problem with a sticky boundary condition

    Parameters
    ----------
    domain : ``stickywalk.geometry.Domain``
        Spatial domain G
    horizon : float
        Terminal time T
    drift, diffusion : callable
        b(t, x) and sigma(t, x); the second-order coefficient is a = sigma sigma^T
    potential, source : callable
        c(t, x) and g(t, x)
    stickiness : callable
        mu(z) >= 0 on the boundary
    absorption, boundary : callable
        gamma(t, z) and psi(t, z) of the boundary operator
        -mu A u + du/dnu + gamma u = psi
    terminal : callable
        phi(x) = u(T, x)
    terminal_generator : callable, optional
        (t, z) -> A phi(z) with coefficients frozen at (t, z). Finite differences are used if omitted.
    exact : ``ExactSolution``, optional
        Known solution, used for manufactured data and reference values
    name : str, optional
        Registry name, recorded in study metadata
    '''

    __slots__ = ('domain', 'horizon', 'drift', 'diffusion', 'potential', 'source', 'stickiness',
                 'absorption', 'boundary', 'terminal', 'terminal_generator', 'exact', 'name')

    def __init__(self, domain, horizon, drift, diffusion, potential, source, stickiness,
                 absorption, boundary, terminal, terminal_generator=None, exact=None, name='custom'):
        if not isinstance(domain, Domain):
            raise ContractError("Input `domain` must be of type {}".format(get_qualname(Domain)))
        if not horizon > 0:
            raise ContractError("Horizon must be positive, not {}".format(horizon))
        if exact is not None and not isinstance(exact, ExactSolution):
            raise ContractError("Input `exact` must be of type {}".format(get_qualname(ExactSolution)))

        self.domain = domain
        self.horizon = float(horizon)
        self.drift = drift
        self.diffusion = diffusion
        self.potential = potential
        self.source = source
        self.stickiness = stickiness
        self.absorption = absorption
        self.boundary = boundary
        self.terminal = terminal
        self.terminal_generator = terminal_generator
        self.exact = exact
        self.name = name

    @property
    def dim(self):
        return self.domain.dim

    def replace(self, **changes):
        '''Returns a copy with the given fields replaced'''
        fields = {k: getattr(self, k) for k in self.__slots__}
        unknown = set(changes) - set(fields)
        if unknown:
            raise ContractError("Unknown Problem fields: {}".format(sorted(unknown)))
        fields.update(changes)
        return Problem(**fields)

    def diffusion_matrix(self, t, x):
        '''Returns a = sigma sigma^T'''
        sigma = self.diffusion(t, x)
        return np.einsum('...ij,...kj->...ik', sigma, sigma)

    def generator_of_terminal(self, t, z):
        '''Returns A phi(z) with coefficients frozen at (t, z)'''
        if self.terminal_generator is not None:
            return self.terminal_generator(t, z)
        return finite_difference_generator(self, self.terminal, t, z)


def generator_apply(b, a, grad, hess):
    '''Returns 1/2 sum a_ij H_ij + sum b_i grad_i over the trailing axes'''
    a = np.asarray(a, dtype=float)
    hess = np.asarray(hess, dtype=float)
    if a.shape[-2:] != hess.shape[-2:] or a.shape[-1] != np.shape(b)[-1] or np.shape(b)[-1] != np.shape(grad)[-1]:
        raise ContractError("Generator operands disagree in dimension: a{}, H{}, b{}, grad{}".format(
            a.shape, hess.shape, np.shape(b), np.shape(grad)))
    if a.size and np.max(np.abs(a - np.swapaxes(a, -1, -2))) > _SYMMETRY_TOLERANCE:
        raise ContractError('Second-order coefficient matrix is not symmetric')
    return 0.5 * np.einsum('...ij,...ij->...', a, hess) + np.einsum('...i,...i->...', b, grad)


def finite_difference_generator(problem, func, t, x, step=FD_STEP):
    '''Applies the generator to func(x) at (t, x) using central differences'''
    x = np.asarray(x, dtype=float)
    d = problem.dim
    points = x.reshape(-1, d)
    n = len(points)
    tt = np.broadcast_to(np.asarray(t, dtype=float), np.shape(x)[:-1]).reshape(n)

    shifts = np.eye(d) * step
    f0 = func(points)
    grad = np.empty((n, d))
    hess = np.empty((n, d, d))
    for i in range(d):
        fp, fm = func(points + shifts[i]), func(points - shifts[i])
        grad[:, i] = (fp - fm) / (2 * step)
        hess[:, i, i] = (fp - 2 * f0 + fm) / step ** 2
        for j in range(i + 1, d):
            cross = (func(points + shifts[i] + shifts[j]) - func(points + shifts[i] - shifts[j])
                     - func(points - shifts[i] + shifts[j]) + func(points - shifts[i] - shifts[j]))
            hess[:, i, j] = hess[:, j, i] = cross / (4 * step ** 2)

    value = generator_apply(problem.drift(tt, points), problem.diffusion_matrix(tt, points), grad, hess)
    return value.reshape(np.shape(x)[:-1])


def manufactured_psi(problem, t, z):
    '''Returns psi = -mu A u + du/dnu + gamma u computed from the exact solution at (t, z)'''
    exact = problem.exact
    if exact is None:
        raise UnsupportedOperationError("Problem '{}' has no exact solution to manufacture data from".format(problem.name))

    z = np.asarray(z, dtype=float)
    tt = np.broadcast_to(np.asarray(t, dtype=float), z.shape[:-1])
    normal = problem.domain.inward_normal(z)
    grad = exact.gradient(tt, z)
    au = generator_apply(problem.drift(tt, z), problem.diffusion_matrix(tt, z), grad, exact.hessian(tt, z))
    return (-problem.stickiness(z) * au + np.sum(grad * normal, axis=-1)
            + problem.absorption(tt, z) * exact.value(tt, z))


def printed_boundary_datum(z):
    '''
    The time-independent boundary datum printed alongside the disk benchmark

    It matches the exact solution only at t = 1 and with the boundary operator taken as
    +mu A u + du/dnu + gamma u on the radius-1.25 disk.
    '''
    z = np.asarray(z, dtype=float)
    z1, z2 = z[..., 0], z[..., 1]
    return -5 - z1 ** 2 / 10 - 21 * z2 ** 2 / 10 + 2 * z1 ** 4 + 14 * z1 ** 2 * z2 ** 2


# disk benchmark coefficients

def _decay(t):
    return np.exp(-(1 - np.asarray(t, dtype=float)))


def _benchmark_drift(t, x):
    return np.stack([x[..., 0] / 2, 2 * x[..., 1]], axis=-1)


def _benchmark_diffusion(t, x):
    sigma = np.zeros(np.shape(x) + (2, ))
    sigma[..., 0, 0] = 1.0
    sigma[..., 1, 1] = _SQRT3 * x[..., 1]
    return sigma


def _benchmark_potential(t, x):
    return x[..., 1]


def _benchmark_source(t, x):
    x1, x2 = x[..., 0], x[..., 1]
    return -(1 + 2 * x1 ** 2 + 8 * x2 ** 2 + x1 ** 2 * x2 + x2 ** 3) * _decay(t) - 10 * x2


def _benchmark_stickiness(z):
    return 2 * z[..., 0] ** 2


def _benchmark_absorption(t, z):
    return np.full(np.broadcast(np.asarray(t), z[..., 0]).shape, -0.5)


def _benchmark_terminal(x):
    return np.sum(np.asarray(x) ** 2, axis=-1) + 10


def _benchmark_terminal_generator(t, z):
    value = z[..., 0] ** 2 + 7 * z[..., 1] ** 2 + 1
    return np.broadcast_to(value, np.broadcast(np.asarray(t), value).shape).copy()


def _benchmark_u(t, x):
    return _decay(t) * np.sum(x ** 2, axis=-1) + 10


def _benchmark_grad(t, x):
    return 2 * _decay(t)[..., None] * x


def _benchmark_hess(t, x):
    scale = 2 * np.broadcast_to(_decay(t), np.shape(x)[:-1])
    return scale[..., None, None] * np.eye(2)


def _benchmark_dudt(t, x):
    return _decay(t) * np.sum(x ** 2, axis=-1)


BENCHMARK_EXACT = ExactSolution(_benchmark_u, _benchmark_grad, _benchmark_hess, _benchmark_dudt)


def benchmark_disk_problem(radius=BENCHMARK_RADIUS):
    '''
    Returns the manufactured disk benchmark on Ball(0, radius) over [0, 1]

    The exact solution is u(t, x) = exp(-(1 - t)) |x|^2 + 10, stickiness is 2 z1^2,
    absorption -0.5, and the boundary datum is manufactured from u at every t.
    '''
    if not radius > 1:
        raise ConfigError("Benchmark radius must exceed 1 so that (0, 1) is interior, not {}".format(radius))

    problem = Problem(domain=Ball((0.0, 0.0), radius),
                      horizon=1.0,
                      drift=_benchmark_drift,
                      diffusion=_benchmark_diffusion,
                      potential=_benchmark_potential,
                      source=_benchmark_source,
                      stickiness=_benchmark_stickiness,
                      absorption=_benchmark_absorption,
                      boundary=None,
                      terminal=_benchmark_terminal,
                      terminal_generator=_benchmark_terminal_generator,
                      exact=BENCHMARK_EXACT,
                      name='benchmark')
    return problem.replace(boundary=partial(manufactured_psi, problem))


# constant problem coefficients

def _zeros(t, x):
    return np.zeros(np.broadcast(np.asarray(t), np.asarray(x)[..., 0]).shape)


def _zero_drift(t, x):
    return np.zeros(np.shape(x))


def _identity_diffusion(t, x):
    d = np.shape(x)[-1]
    return np.broadcast_to(np.eye(d), np.shape(x) + (d, )).copy()


def _unit_stickiness(z):
    return np.ones(np.shape(z)[:-1])


def _constant_terminal(constant, x):
    return np.full(np.shape(x)[:-1], constant)


def _constant_value(constant, t, x):
    return np.full(np.broadcast(np.asarray(t), np.asarray(x)[..., 0]).shape, constant)


def _zero_gradient(t, x):
    return np.zeros(np.shape(x))


def _zero_hessian(t, x):
    d = np.shape(x)[-1]
    return np.zeros(np.shape(x) + (d, ))


def constant_problem(constant, domain, horizon):
    '''Returns the problem whose solution is identically `constant`: all data vanish except phi'''
    exact = ExactSolution(partial(_constant_value, float(constant)), _zero_gradient, _zero_hessian, _zeros)
    return Problem(domain=domain,
                   horizon=horizon,
                   drift=_zero_drift,
                   diffusion=_identity_diffusion,
                   potential=_zeros,
                   source=_zeros,
                   stickiness=_unit_stickiness,
                   absorption=_zeros,
                   boundary=_zeros,
                   terminal=partial(_constant_terminal, float(constant)),
                   terminal_generator=_zeros,
                   exact=exact,
                   name='constant')


def _make_benchmark(radius=BENCHMARK_RADIUS, constant=None):
    return benchmark_disk_problem(radius)


def _make_constant(radius=BENCHMARK_RADIUS, constant=10.0):
    return constant_problem(constant, Ball((0.0, 0.0), radius), 1.0)


PROBLEMS = {
    'benchmark': _make_benchmark,
    'constant': _make_constant,
}


def make_problem(name, radius=BENCHMARK_RADIUS, constant=10.0):
    '''Builds a registered problem by name'''
    if name not in PROBLEMS:
        raise ConfigError("Unknown problem '{}'; choose one of {}".format(name, sorted(PROBLEMS)))
    return PROBLEMS[name](radius=radius, constant=constant)
