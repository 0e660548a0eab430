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
"""Lengthening of the diameter-9 two-weight codes of `D(4, 1+0)` to
`D(5, 1+0)`.

The six size-64 codes get a Quad coordinate that is zero in every
codeword and are then extended one generator at a time with nonzero
weights in `{6, 8, 10}` until no class extends. Only codes having a
size-64 shortening among the six are reached this way.
"""
import time
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from doobcodes.alphabet.shape import Shape
from doobcodes.campaigns.extensions import (
    CampaignAmbient,
    DimensionLevel,
    classify_levels,
)
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.operations import append_zero_coordinate, shorten
from doobcodes.codes.weights import WeightDistribution, weight_distribution
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.config.search_config import SearchConfig
from doobcodes.constants import DEFAULT_THREADS
from doobcodes.corpus.code_format import read_codes
from doobcodes.corpus.manifest import data_path
from doobcodes.enums import CoordKind
from doobcodes.equivalence.class_store import ClassStore
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)

LENGTHENED_SHAPE = Shape.of(5, 1, 0)
LENGTHENING_WEIGHTS: Tuple[int, ...] = (6, 8, 10)


def d41_two_weight_codes() -> List[AdditiveCode]:
    """The six size-64 codes of `D(4, 1+0)` with weights 6 and 8."""
    return read_codes(data_path("tables/b.codes"))


class LengtheningResult(NamedTuple):
    """Classes found by `lengthen_diameter11`.

    Attributes:
        levels: The classification levels by binary dimension.
        classes: Representatives by code size, for sizes above the seeds.
        distributions: The distinct weight distributions by code size.
    """

    levels: List[DimensionLevel]
    classes: Dict[int, List[AdditiveCode]]
    distributions: Dict[int, List[WeightDistribution]]

    @property
    def largest_size(self) -> int:
        return max(self.classes, default=0)

    def type_counts(self, size: int) -> Dict[Tuple[int, int], int]:
        """Number of classes of each group type among a size."""
        counts: Dict[Tuple[int, int], int] = {}
        for code in self.classes.get(size, []):
            counts[code.group_type] = counts.get(code.group_type, 0) + 1
        return counts


def lengthen_diameter11(
    seeds: Optional[Sequence[AdditiveCode]] = None,
    budgets: Optional[Budgets] = None,
    threads: int = DEFAULT_THREADS,
) -> LengtheningResult:
    """Extends the lengthened diameter-9 codes in `D(5, 1+0)`.

    Args:
        seeds: Size-64 codes of `D(4, 1+0)`; the six two-weight codes by
            default.
        budgets: Limits; by default `DEFAULT_BUDGETS` with the ambient
            budget raised to the `4^11` vertices of `D(5, 1+0)`.
        threads: Worker threads, 0 meaning one per CPU.

    Returns:
        The classes of every size reached. An empty level above the
        largest size certifies that none of them extends.
    """
    start = time.time()
    seeds = list(seeds) if seeds is not None else d41_two_weight_codes()
    if budgets is None:
        budgets = DEFAULT_BUDGETS.with_overrides(
            {"ambient": LENGTHENED_SHAPE.ambient_order}
        )
    config = SearchConfig(
        min_distance=min(LENGTHENING_WEIGHTS),
        weights=LENGTHENING_WEIGHTS,
        shape=LENGTHENED_SHAPE,
        budgets=budgets,
        threads=threads,
    )
    lengthened = [
        append_zero_coordinate(seed, CoordKind.QUAD) for seed in seeds
    ]
    seed_dimension = max((seed.dimension for seed in lengthened), default=0)
    levels = classify_levels(
        lengthened,
        CampaignAmbient(config),
        expand=lambda dimension: dimension >= seed_dimension,
    )
    classes: Dict[int, List[AdditiveCode]] = {}
    distributions: Dict[int, List[WeightDistribution]] = {}
    for level in levels:
        if level.dimension <= seed_dimension or not level.classes:
            continue
        size = 2**level.dimension
        classes[size] = level.classes
        found = {
            weight_distribution(code, budgets=budgets)
            for code in level.classes
        }
        distributions[size] = sorted(found, key=lambda wd: wd.counts)
    logger.info(
        "Lengthening to `%s`: %s; search restricted to codes with a size-%d "
        "shortening (%s).",
        LENGTHENED_SHAPE,
        ", ".join(
            f"{len(codes)} classes of size {size}"
            for size, codes in classes.items()
        )
        or "no extension",
        2**seed_dimension,
        get_human_readable_time(time.time() - start),
    )
    return LengtheningResult(
        levels=levels, classes=classes, distributions=distributions
    )


def shortening_parents(
    code: AdditiveCode,
    parents: Optional[Sequence[AdditiveCode]] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> List[Tuple[int, AdditiveCode]]:
    """Quad coordinates whose shortening is equivalent to a parent.

    Args:
        code: A code with at least one Quad coordinate.
        parents: Candidate parents; the six two-weight codes of
            `D(4, 1+0)` by default.
        budgets: Limits for canonical forms.

    Returns:
        Pairs of coordinate and the equivalent parent, in coordinate order.
    """
    store = ClassStore(budgets)
    store.update(parents if parents is not None else d41_two_weight_codes())
    found: List[Tuple[int, AdditiveCode]] = []
    for coordinate in code.shape.coordinates(CoordKind.QUAD):
        parent = store.find(shorten(code, coordinate))
        if parent is not None:
            found.append((coordinate, parent))
    return found


__all__ = [
    "LENGTHENED_SHAPE",
    "LENGTHENING_WEIGHTS",
    "LengtheningResult",
    "d41_two_weight_codes",
    "lengthen_diameter11",
    "shortening_parents",
]
