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
The ``alphabet`` module contains the coordinate alphabets of Doob-graph
ambients and of GF(4)^n: symbol tables, the ambient ``Shape``, the
``MixedVector`` element type, weights, distances and the three inner products.
"""
from doobcodes.alphabet.gf4 import (
    GF4,
    conjugate,
    gf4_add,
    gf4_inverse,
    gf4_mul,
    gf4_trace,
    hamming_weight,
    hermitian_ip,
    trace_hermitian_ip,
)
from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.vectors import (
    MixedVector,
    doob_distance,
    doob_ip,
    doob_weight,
)
from doobcodes.enums import CoordKind

__all__ = [
    "CoordKind",
    "GF4",
    "MixedVector",
    "Shape",
    "conjugate",
    "doob_distance",
    "doob_ip",
    "doob_weight",
    "gf4_add",
    "gf4_inverse",
    "gf4_mul",
    "gf4_trace",
    "hamming_weight",
    "hermitian_ip",
    "trace_hermitian_ip",
]
