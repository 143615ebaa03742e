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
name = 'stickywalk'
__version__ = '0.1.0'
