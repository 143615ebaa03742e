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
Provides closed-form domains with membership, boundary distance, projection and inward normals

Every method accepts a single point of shape (d,) or a batch of shape (n, d) and
returns results with the leading batch shape. Membership is strict: a point is
interior iff its level value is negative, on the boundary iff it is zero and
exterior iff it is positive, so exactly one classification holds.
"""
from collections import namedtuple

import numpy as np

from .errors import ContractError, PreconditionError, NonUniqueProjectionError


BOUNDARY_TOLERANCE = 1e-9
_UNIT_TOLERANCE = 1e-12
_SETTLE_ITERATIONS = 4


class Projection(namedtuple('Projection', 'foot distance normal')):
    '''Boundary foot of an exterior point, its distance and the inward unit normal at the foot'''


class Domain(object):
    '''Base class of the closed-form domains'''

    __slots__ = ('dim', )

    def __init__(self, dim):
        if dim < 1:
            raise ContractError("Domain dimension must be positive, not {}".format(dim))
        self.dim = dim

    def contains(self, x):
        '''Returns True where x is strictly interior'''
        return self._level(self._coerce(x)) < 0

    def on_boundary(self, x):
        '''Returns True where x lies exactly on the boundary'''
        return self._level(self._coerce(x)) == 0

    def exterior(self, x):
        '''Returns True where x lies outside the closure of the domain'''
        return self._level(self._coerce(x)) > 0

    def distance_to_boundary(self, x):
        '''Returns the distance from x to the boundary'''
        return self._distance(self._coerce(x))

    def project_to_boundary(self, x):
        '''
        Projects exterior points onto the boundary

        Returns a ``Projection`` whose foot satisfies ``x + distance * normal == foot``
        up to rounding. Feet are settled into the closed domain.
        '''
        x = self._coerce(x)
        if not np.all(self._level(x) > 0):
            raise PreconditionError('Projection requires exterior points; got interior or boundary points')
        foot, distance, normal = self._project(x)
        return Projection(self.settle(foot, normal), distance, normal)

    def inward_normal(self, z):
        '''Returns the inward unit normal at boundary points z'''
        z = self._coerce(z)
        if np.any(self._distance(z) > BOUNDARY_TOLERANCE):
            raise PreconditionError("Inward normal requires boundary points within {}".format(BOUNDARY_TOLERANCE))
        return self._normal(z)

    def settle(self, x, normal):
        '''Moves points that rounding left marginally outside back into the closed domain along `normal`'''
        x = np.array(x, dtype=float)
        flat = x.reshape(-1, self.dim)
        flat_normal = np.broadcast_to(normal, x.shape).reshape(-1, self.dim)
        for _ in range(_SETTLE_ITERATIONS):
            outside = self._level(flat) > 0
            if not np.any(outside):
                break
            flat[outside] = np.nextafter(flat[outside], flat[outside] + flat_normal[outside])
        return flat.reshape(x.shape)

    def _coerce(self, x):
        '''Returns x as a float array with trailing dimension d'''
        x = np.asarray(x, dtype=float)
        if x.ndim == 0 or x.shape[-1] != self.dim:
            raise ContractError("Expected points of dimension {}, got shape {}".format(self.dim, x.shape))
        return x

    def _level(self, x):
        raise NotImplementedError

    def _distance(self, x):
        raise NotImplementedError

    def _project(self, x):
        raise NotImplementedError

    def _normal(self, z):
        raise NotImplementedError


class Ball(Domain):
    '''
    The open ball ``|x - center| < radius``

    Parameters
    ----------
    center : array-like
        Center point; its length fixes the dimension
    radius : float
        Positive radius
    '''

    __slots__ = ('center', 'radius')

    def __init__(self, center, radius):
        center = np.array(center, dtype=float).reshape(-1)
        super().__init__(center.size)
        if not radius > 0:
            raise ContractError("Ball radius must be positive, not {}".format(radius))
        center.setflags(write=False)
        self.center = center
        self.radius = float(radius)

    def __repr__(self):
        return "Ball(center={}, radius={})".format(self.center.tolist(), self.radius)

    def _level(self, x):
        return np.sum((x - self.center) ** 2, axis=-1) - self.radius ** 2

    def _distance(self, x):
        return np.abs(self.radius - np.linalg.norm(x - self.center, axis=-1))

    def _project(self, x):
        offset = x - self.center
        norm = np.linalg.norm(offset, axis=-1)
        distance = norm - self.radius
        if np.any(distance > self.radius):
            raise NonUniqueProjectionError(
                "Exterior point lies farther than one radius ({}) from the boundary".format(self.radius))
        unit = offset / norm[..., None]
        foot = self.center + self.radius * unit
        return foot, distance, -unit

    def _normal(self, z):
        offset = self.center - z
        return offset / np.linalg.norm(offset, axis=-1)[..., None]


class HalfSpace(Domain):
    '''
    The open half-space ``normal . x > offset``

    Unbounded; intended for formula-level checks.

    Parameters
    ----------
    normal : array-like
        Unit inward normal
    offset : float
        Signed offset of the boundary plane
    '''

    __slots__ = ('normal', 'offset')

    def __init__(self, normal, offset=0.0):
        normal = np.array(normal, dtype=float).reshape(-1)
        super().__init__(normal.size)
        if abs(np.linalg.norm(normal) - 1.0) > _UNIT_TOLERANCE:
            raise ContractError("HalfSpace normal must have unit length, got {}".format(np.linalg.norm(normal)))
        normal.setflags(write=False)
        self.normal = normal
        self.offset = float(offset)

    def __repr__(self):
        return "HalfSpace(normal={}, offset={})".format(self.normal.tolist(), self.offset)

    def _level(self, x):
        return self.offset - x @ self.normal

    def _distance(self, x):
        return np.abs(self._level(x))

    def _project(self, x):
        distance = self._level(x)
        normal = np.broadcast_to(self.normal, x.shape)
        return x + distance[..., None] * normal, distance, normal.copy()

    def _normal(self, z):
        return np.broadcast_to(self.normal, z.shape).copy()


class Interval(Domain):
    '''
    The open interval ``lo < x < hi`` in one dimension

    Scalars are accepted as single points.
    '''

    __slots__ = ('lo', 'hi')

    def __init__(self, lo, hi):
        super().__init__(1)
        if not lo < hi:
            raise ContractError("Interval requires lo < hi, got [{}, {}]".format(lo, hi))
        self.lo = float(lo)
        self.hi = float(hi)

    def __repr__(self):
        return "Interval(lo={}, hi={})".format(self.lo, self.hi)

    def _coerce(self, x):
        x = np.asarray(x, dtype=float)
        if x.ndim == 0:
            x = x.reshape(1)
        return super()._coerce(x)

    def _level(self, x):
        x = x[..., 0]
        return np.maximum(self.lo - x, x - self.hi)

    def _distance(self, x):
        x = x[..., 0]
        return np.minimum(np.abs(x - self.lo), np.abs(self.hi - x))

    def _project(self, x):
        below = x[..., 0] < self.lo
        foot = np.where(below, self.lo, self.hi)[..., None]
        normal = np.where(below, 1.0, -1.0)[..., None]
        distance = np.abs(foot - x)[..., 0]
        return foot, distance, normal

    def _normal(self, z):
        z = z[..., 0]
        at_lo = np.abs(z - self.lo) <= BOUNDARY_TOLERANCE
        return np.where(at_lo, 1.0, -1.0)[..., None]
