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
Provides counter-based Rademacher streams

Trajectory ``index`` under master ``seed`` owns the key ``K(seed, index)``; its k-th
draw is the splitmix64 output at position k of the sequence started at that key,
so any draw can be evaluated directly from (seed, index, k) without shared state.
Bit j of a draw gives component j of the +/-1 vector.
"""
import numpy as np

from .errors import ContractError


_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1
MAX_DIMENSION = 64


def _mix64(z):
    '''splitmix64 finalizer on a uint64 array'''
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def stream_keys(seed, indices):
    '''Returns the stream keys of trajectory `indices` under master `seed`'''
    indices = np.asarray(indices, dtype=np.uint64)
    with np.errstate(over='ignore'):
        base = _mix64(np.array([int(seed) & _MASK64], dtype=np.uint64))
        return _mix64(base + _mix64(indices + np.uint64(1)) * _GOLDEN)


def draw_bits(keys, counter):
    '''Returns the 64-bit draw number `counter` of each stream'''
    with np.errstate(over='ignore'):
        position = np.array([counter + 1], dtype=np.uint64) * _GOLDEN
        return _mix64(np.asarray(keys, dtype=np.uint64) + position)


def rademacher_block(keys, counter, d):
    '''Returns an (n, d) array of +/-1 draws number `counter` for n streams'''
    if not 1 <= d <= MAX_DIMENSION:
        raise ContractError("Rademacher draws support 1 <= d <= {}, not {}".format(MAX_DIMENSION, d))
    bits = draw_bits(keys, counter)
    shifts = np.arange(d, dtype=np.uint64)
    return np.where((bits[:, None] >> shifts) & np.uint64(1), 1.0, -1.0)


class RademacherStream(object):
    '''
    The private +/-1 stream of one trajectory

    Parameters
    ----------
    seed : int
        Master seed of the run
    index : int
        Trajectory index
    counter : int, optional
        Position of the next draw
    '''

    __slots__ = ('seed', 'index', 'counter', '_key')

    def __init__(self, seed, index, counter=0):
        self.seed = int(seed)
        self.index = int(index)
        self.counter = int(counter)
        self._key = stream_keys(self.seed, [self.index])

    def draw(self, d):
        '''Returns the next vector of d independent +/-1 components'''
        xi = rademacher_block(self._key, self.counter, d)[0]
        self.counter += 1
        return xi
