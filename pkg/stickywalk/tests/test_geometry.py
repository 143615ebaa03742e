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
Tests domain membership, projection and normals
"""
import numpy as np
import pytest

from stickywalk.errors import ContractError, NonUniqueProjectionError, PreconditionError
from stickywalk.geometry import Ball, HalfSpace, Interval


def test_ball_classification_partitions_points():
    '''Every point is exactly one of interior, boundary, exterior'''
    ball = Ball((0.0, 0.0), 1.25)
    rng = np.random.default_rng(0)
    points = np.vstack([rng.uniform(-2, 2, size=(1000, 2)), [[0.0, 1.25], [1.25, 0.0], [-1.25, 0.0]]])

    inside, edge, outside = ball.contains(points), ball.on_boundary(points), ball.exterior(points)
    assert np.all(inside.astype(int) + edge.astype(int) + outside.astype(int) == 1)
    assert edge[-3:].all()


def test_ball_projection_and_reflection():
    ball = Ball((0.0, 0.0), 1.25)
    foot, r, nu = ball.project_to_boundary(np.array([[0.0, 1.35]]))

    assert foot[0] == pytest.approx([0.0, 1.25])
    assert r[0] == pytest.approx(0.1)
    assert nu[0] == pytest.approx([0.0, -1.0])
    assert (np.array([0.0, 1.35]) + 2 * r[0] * nu[0]) == pytest.approx([0.0, 1.15])
    assert not ball.exterior(foot).any()


def test_ball_projection_feet_stay_in_closure():
    ball = Ball((0.3, -0.2), 1.25)
    rng = np.random.default_rng(1)
    angles = rng.uniform(0, 2 * np.pi, 10000)
    radii = rng.uniform(1.25 + 1e-12, 2.0, 10000)
    points = ball.center + radii[:, None] * np.stack([np.cos(angles), np.sin(angles)], axis=-1)

    foot, r, nu = ball.project_to_boundary(points)
    assert not ball.exterior(foot).any()
    assert np.allclose(points + r[:, None] * nu, foot, atol=1e-12)
    assert np.allclose(np.linalg.norm(nu, axis=-1), 1.0)
    assert ball.contains(foot + 1e-6 * nu).all()


def test_ball_projection_preconditions():
    ball = Ball((0.0, 0.0), 1.25)
    with pytest.raises(PreconditionError):
        ball.project_to_boundary([0.0, 1.0])
    with pytest.raises(PreconditionError):
        ball.project_to_boundary([0.0, 1.25])
    with pytest.raises(NonUniqueProjectionError):
        ball.project_to_boundary([0.0, 3.0])


def test_ball_inward_normal():
    ball = Ball((0.0, 0.0), 1.25)
    assert ball.inward_normal([1.25, 0.0]) == pytest.approx([-1.0, 0.0])
    with pytest.raises(PreconditionError):
        ball.inward_normal([1.0, 0.0])


def test_ball_distance():
    ball = Ball((0.0, 0.0), 1.25)
    assert ball.distance_to_boundary([[0.0, 1.0], [0.0, 2.0]]) == pytest.approx([0.25, 0.75])


def test_dimension_mismatch():
    with pytest.raises(ContractError):
        Ball((0.0, 0.0), 1.0).contains([0.0, 0.0, 0.0])
    with pytest.raises(ContractError):
        Ball((0.0, 0.0), 0.0)


def test_halfspace():
    wall = HalfSpace((0.0, 1.0))
    assert wall.contains([3.0, 0.1])
    assert wall.on_boundary([3.0, 0.0])
    foot, r, nu = wall.project_to_boundary([[2.0, -0.1]])
    assert foot[0] == pytest.approx([2.0, 0.0])
    assert r[0] == pytest.approx(0.1)
    assert nu[0] == pytest.approx([0.0, 1.0])

    with pytest.raises(ContractError):
        HalfSpace((0.0, 2.0))


def test_interval_accepts_scalars():
    interval = Interval(0.0, 1.0)
    assert interval.contains(0.5)
    assert interval.on_boundary(1.0)
    assert interval.exterior(-0.2)

    foot, r, nu = interval.project_to_boundary([[-0.2], [1.3]])
    assert foot[:, 0] == pytest.approx([0.0, 1.0])
    assert r == pytest.approx([0.2, 0.3])
    assert nu[:, 0] == pytest.approx([1.0, -1.0])
    assert interval.inward_normal([[0.0], [1.0]])[:, 0] == pytest.approx([1.0, -1.0])


def test_settle_moves_marginal_points_inside():
    ball = Ball((0.0, 0.0), 1.0)
    nearly = np.array([[0.0, np.nextafter(1.0, 2.0)]])
    settled = ball.settle(nearly, np.array([[0.0, -1.0]]))
    assert not ball.exterior(settled).any()
    assert settled[0, 1] == pytest.approx(1.0)


def test_halfspace_normals_point_inside():
    wall = HalfSpace((0.6, 0.8), offset=0.5)
    rng = np.random.default_rng(2)
    points = rng.uniform(-3, 3, size=(10000, 2))
    points = points[wall.exterior(points)]

    foot, r, nu = wall.project_to_boundary(points)
    assert np.allclose(points + r[:, None] * nu, foot, atol=1e-12)
    assert not wall.exterior(foot).any()
    assert wall.distance_to_boundary(foot).max() < 1e-12
    assert wall.contains(foot + 1e-6 * nu).all()
