# Copyright 2026 The schemewalk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Continuous-time quantum walks on association schemes."""

from ._core import (
    SchemeWalkError,
    average,
    catalog_names,
    character_table,
    intersection_array,
    spectrum,
    walk,
)

__all__ = [
    "SchemeWalkError",
    "average",
    "catalog_names",
    "character_table",
    "intersection_array",
    "spectrum",
    "walk",
]
