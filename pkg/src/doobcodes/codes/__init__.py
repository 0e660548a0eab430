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
The ``codes`` module contains ``AdditiveCode``, a subgroup of the ambient
module stored in a unique echelon form, and everything computed from a code:
codeword enumeration, weight distributions, the MacWilliams transform, duals
under the Doob, trace-Hermitian and Hermitian forms, breadth-first searches
over the ambient (covering radius, intersection arrays) and the structural
operations (puncturing, shortening, lengthening, concatenation).
"""
from doobcodes.codes.additive_code import AdditiveCode, group_type, span
from doobcodes.codes.ambient import (
    Ambient,
    covering_radius,
    distance_distribution,
    intersection_array,
    is_completely_regular,
)
from doobcodes.codes.duality import (
    dual,
    hermitian_dual,
    is_self_dual,
    is_self_orthogonal,
)
from doobcodes.codes.operations import (
    append_zero_coordinate,
    bits_to_2z4,
    concatenate_to_binary,
    even_subcode,
    f4_span,
    is_cyclic,
    is_f4_linear,
    puncture,
    shorten,
)
from doobcodes.codes.weights import (
    IntersectionArray,
    NotCompletelyRegular,
    WeightDistribution,
    macwilliams,
    min_distance,
    weight_distribution,
)

__all__ = [
    "AdditiveCode",
    "Ambient",
    "IntersectionArray",
    "NotCompletelyRegular",
    "WeightDistribution",
    "append_zero_coordinate",
    "bits_to_2z4",
    "concatenate_to_binary",
    "covering_radius",
    "distance_distribution",
    "dual",
    "even_subcode",
    "f4_span",
    "group_type",
    "hermitian_dual",
    "intersection_array",
    "is_completely_regular",
    "is_cyclic",
    "is_f4_linear",
    "is_self_dual",
    "is_self_orthogonal",
    "macwilliams",
    "min_distance",
    "puncture",
    "shorten",
    "span",
    "weight_distribution",
]
