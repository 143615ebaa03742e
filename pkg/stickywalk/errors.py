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
Provides the stickywalk exception hierarchy
"""


class StickyWalkError(Exception):
    '''Base class of all errors raised by stickywalk'''


class ContractError(StickyWalkError):
    '''An argument violates a shape or structural contract (dimension, symmetry, construction)'''


class PreconditionError(StickyWalkError):
    '''An argument is well-formed but not admissible for the requested operation'''


class NonUniqueProjectionError(PreconditionError):
    '''An exterior point lies too far from the boundary for its projection to be unique'''


class ConfigError(StickyWalkError):
    '''A study or problem configuration is invalid'''


class UnsupportedOperationError(StickyWalkError):
    '''The operation needs data the object does not carry'''


class RunawayError(StickyWalkError):
    '''A trajectory exceeded its step budget'''


class DegenerateFitError(StickyWalkError):
    '''A log-log fit was requested on unusable rows'''


class ArtifactError(StickyWalkError):
    '''An artifact could not be written'''


class TrajectoryError(StickyWalkError):
    '''A scheme failure attributed to a single trajectory'''

    def __init__(self, index, message):
        super().__init__(index, message)
        self.index = index
        self.message = message

    def __str__(self):
        return "trajectory {}: {}".format(self.index, self.message)
