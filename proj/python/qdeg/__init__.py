# Copyright 2026 The qdeg Authors
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
"""Degradability decisions and capacities for low-dimensional quantum channels."""

from ._qdeg import (
    Channel,
    QdegError,
    Tolerance,
    Verdict,
    coherent_information,
    complement,
    covariant_capacity,
    decide,
    depolarizing,
    ecd_screen,
    is_ppt,
    one_shot_optimize,
    parse_channel,
    td_channel,
    td_complement_capacity,
    td_complement_qubit,
    von_neumann_entropy,
)

__all__ = [
    "Channel",
    "QdegError",
    "Tolerance",
    "Verdict",
    "coherent_information",
    "complement",
    "covariant_capacity",
    "decide",
    "depolarizing",
    "ecd_screen",
    "is_ppt",
    "one_shot_optimize",
    "parse_channel",
    "td_channel",
    "td_complement_capacity",
    "td_complement_qubit",
    "von_neumann_entropy",
]
