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
Provides shared helper utilities
"""
import os
import inspect
import contextlib

from .errors import ArtifactError, StickyWalkError


def get_qualname(o):
    if inspect.isclass(o):
        return "{}.{}".format(o.__module__, o.__name__)
    else:
        return get_qualname(o.__class__)


def format_sig(value, digits=6):
    '''Formats a number with `digits` significant digits'''
    if isinstance(value, int):
        return str(value)
    return "{:.{}g}".format(float(value), digits)


def dump_artifact(*path, data, module, mode, **dump_kwargs):
    '''Artifact saver helper. Writes to a sibling temporary file, then replaces the target'''
    target = os.path.join(*path)
    tmp = "{}.tmp{}".format(target, os.getpid())
    with reraise('Failed to write artifact {}', (target, ), error=ArtifactError):
        directory = os.path.dirname(target)
        if directory:
            os.makedirs(directory, exist_ok=True)
        try:
            with open(tmp, mode, encoding='utf-8', newline='') as f:
                if module is None:
                    f.write(data)
                else:
                    module.dump(data, f, **dump_kwargs)
            os.replace(tmp, target)
        except BaseException:
            with contextlib.suppress(OSError):
                os.remove(tmp)
            raise
    return target


@contextlib.contextmanager
def reraise(prefix, prefix_args, error=None):
    '''Reraises an exception with a more informative prefix

    The original class is kept for stickywalk errors unless `error` names another one;
    anything else becomes `error` (default StickyWalkError).
    '''
    try:
        yield
    except Exception as e:
        if error is None:
            error = type(e) if _is_plain(e) else StickyWalkError
        raise error("{}: {}".format(prefix.format(*prefix_args), e)).with_traceback(e.__traceback__)


def _is_plain(e):
    '''Returns True if the exception class can be rebuilt from a single message'''
    return isinstance(e, StickyWalkError) and len(e.args) <= 1
