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
The ``campaigns`` module holds the classification searches. All of them
grow codes one generator at a time (``extensions``) and keep one code per
equivalence class: the Hamming classification by length and dimension, the
weight-constrained classification of Doob ambients, the lengthening to
`D(5, 1+0)`, the lifting tests in `D(6, 0+0)` and the cyclic searches
behind the dodecacode.
"""
from doobcodes.campaigns.cyclic import (
    cyclic_closure,
    orbit_representatives,
    search_cyclic,
)
from doobcodes.campaigns.dodecacode import (
    PuncturedReport,
    dodecacode_seed_code,
    is_dodecacode,
    puncture_dodecacode,
    punctured_intersection_array,
    search_dodecacode,
    verify_unique_completion,
)
from doobcodes.campaigns.extensions import (
    CampaignAmbient,
    DimensionLevel,
    classify_levels,
    extend,
    extension_vectors,
    grow_level,
)
from doobcodes.campaigns.hamming import (
    HammingClassification,
    classify_hamming,
)
from doobcodes.campaigns.lengthening import (
    LengtheningResult,
    lengthen_diameter11,
    shortening_parents,
)
from doobcodes.campaigns.lifting import (
    LiftingReport,
    is_liftable,
    lift_diameter12,
    lift_rows,
    liftable_codewords,
    lifts,
    split_by_dimension,
    verify_lifted_markup,
)
from doobcodes.campaigns.tables import ClassTable, TableCell, emit_tables
from doobcodes.campaigns.two_weight import (
    DIAMETER9_AMBIENTS,
    classify_diameter9,
    classify_doob_two_weight,
    classify_weight_constrained,
)

__all__ = [
    "CampaignAmbient",
    "ClassTable",
    "DIAMETER9_AMBIENTS",
    "DimensionLevel",
    "HammingClassification",
    "LengtheningResult",
    "LiftingReport",
    "PuncturedReport",
    "TableCell",
    "classify_diameter9",
    "classify_doob_two_weight",
    "classify_hamming",
    "classify_levels",
    "classify_weight_constrained",
    "cyclic_closure",
    "dodecacode_seed_code",
    "emit_tables",
    "extend",
    "extension_vectors",
    "grow_level",
    "is_dodecacode",
    "is_liftable",
    "lengthen_diameter11",
    "lift_diameter12",
    "lift_rows",
    "liftable_codewords",
    "lifts",
    "orbit_representatives",
    "puncture_dodecacode",
    "punctured_intersection_array",
    "search_cyclic",
    "search_dodecacode",
    "shortening_parents",
    "split_by_dimension",
    "verify_lifted_markup",
    "verify_unique_completion",
]
