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
The ``equivalence`` module decides equivalence of additive codes under the
monomial group of a shape: block-respecting coordinate permutations combined
with weight-preserving automorphisms of every coordinate group. Codes get a
canonical certificate; ``ClassStore`` keeps one representative per class.
"""
from doobcodes.equivalence.canonical import (
    CanonicalCertificate,
    canonical_code,
    canonical_form,
    equivalent,
    invariant_key,
)
from doobcodes.equivalence.cell_groups import CellGroup, cell_group
from doobcodes.equivalence.class_store import ClassStore
from doobcodes.equivalence.monomial import MonomialMap, apply, compose

__all__ = [
    "CanonicalCertificate",
    "CellGroup",
    "ClassStore",
    "MonomialMap",
    "apply",
    "canonical_code",
    "canonical_form",
    "cell_group",
    "compose",
    "equivalent",
    "invariant_key",
]
