#  Copyright (c) doobcodes contributors 2026. All Rights Reserved.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at:
#
#       https://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
#  or implied. See the License for the specific language governing
#  permissions and limitations under the License.
"""
The ``graphs`` module holds a small simple ``Graph`` type with strongly
regular and distance-regular checks, coset graphs of additive codes, and
canonical labeling by individualization and refinement, used to sort graphs
into isomorphism classes.
"""
from doobcodes.graphs.canonical import (
    canonical_graph,
    canonical_labeling,
    classify_isomorphism,
)
from doobcodes.graphs.coset_graph import ambient_graph, coset_graph
from doobcodes.graphs.graph import (
    Graph,
    SrgParams,
    distance_regular_array,
    srg_params,
)

__all__ = [
    "Graph",
    "SrgParams",
    "ambient_graph",
    "canonical_graph",
    "canonical_labeling",
    "classify_isomorphism",
    "coset_graph",
    "distance_regular_array",
    "srg_params",
]
