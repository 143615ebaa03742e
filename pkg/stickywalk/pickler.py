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
Provides dill utilities for shipping problems to worker processes

Problem coefficients are arbitrary callables (closures, lambdas, partials), which
the standard pickler refuses; dill serialises them by value.
"""
import dill

from .errors import ContractError
from .problem import Problem
from .utils import get_qualname, reraise


def dumps_problem(problem):
    '''Returns a dill payload of `problem`'''
    if not isinstance(problem, Problem):
        raise ContractError("Input `problem` must be of type {}".format(get_qualname(Problem)))
    with reraise('Problem {!r} cannot be serialised', (problem.name, )):
        return dill.dumps(problem, recurse=True)


def loads_problem(payload):
    '''Returns the problem held by a dill payload'''
    problem = dill.loads(payload)
    if not isinstance(problem, Problem):
        raise ContractError("Payload holds {}, not a problem".format(get_qualname(problem)))
    return problem
