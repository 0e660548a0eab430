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
"""Classification of additive `(n, 2^k, >=d)_4` codes by length and
dimension.

At every length the search starts from the trivial code and from the
classes one coordinate shorter with a zero coordinate appended, and grows
codes one generator at a time while the minimum distance stays at least
`d`. With a target `(N, K)`, the classes of length `n` and dimension `k` are
only extended when `k + 2 (N - n) + 2 >= K`; the cells that this cut leaves
incomplete are recorded as lower bounds.
"""
import time
from typing import Dict, List, NamedTuple, Optional, Tuple

from doobcodes.alphabet.shape import Shape
from doobcodes.campaigns.extensions import CampaignAmbient, classify_levels
from doobcodes.campaigns.tables import ClassTable
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.operations import append_zero_coordinate
from doobcodes.config.search_config import SearchConfig
from doobcodes.enums import CoordKind
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)

Cell = Tuple[int, int]


class HammingClassification(NamedTuple):
    """Outcome of `classify_hamming`.

    Attributes:
        table: Class counts `N(n, k, d)`.
        representatives: One code per class, by `(n, k)`.
        maximal: Representatives without extension, by `(n, k)`.
    """

    table: ClassTable
    representatives: Dict[Cell, List[AdditiveCode]]
    maximal: Dict[Cell, List[AdditiveCode]]


def classify_hamming(
    config: SearchConfig, max_length: Optional[int] = None
) -> HammingClassification:
    """Classifies the additive codes of minimum distance at least
    `config.min_distance` for every length up to `max_length`.

    Args:
        config: Distance bound, optional target, budgets and threads; the
            shape is ignored.
        max_length: Largest length, by default the target length.

    Returns:
        The class table with representatives.

    Raises:
        ValueError: if neither a maximum length nor a target is given.
        BudgetExceededError: if an ambient `GF(4)^n` exceeds the budget.
    """
    if max_length is None:
        if config.target is None:
            raise ValueError("A maximum length or a target is required.")
        max_length = config.target[0]
    distance = config.min_distance
    table = ClassTable(distance)
    representatives: Dict[Cell, List[AdditiveCode]] = {}
    maximal: Dict[Cell, List[AdditiveCode]] = {}
    previous: List[AdditiveCode] = []
    for length in range(distance, max_length + 1):
        start = time.time()
        shape = Shape.gf4(length)
        campaign = CampaignAmbient(config.copy(update={"shape": shape}))
        seeds = [AdditiveCode.trivial(shape)] + [
            append_zero_coordinate(code, CoordKind.BI) for code in previous
        ]
        levels = classify_levels(
            seeds,
            campaign,
            lambda k, n=length: config.worth_extending(n - 1, k),
        )
        previous = []
        for level in levels:
            k = level.dimension
            if not config.worth_extending(length - 1, k):
                continue
            exact = config.worth_extending(length, k)
            table.record(
                length,
                k,
                len(level.classes),
                exact=exact,
                maximal=len(level.maximal) if level.expanded else None,
            )
            representatives[(length, k)] = level.classes
            maximal[(length, k)] = level.maximal
            if exact:
                previous.extend(level.classes)
        logger.info(
            "Length %d, d=%d: %s (%s).",
            length,
            distance,
            " ".join(str(cell) for cell in table.row(length).values()),
            get_human_readable_time(time.time() - start),
        )
    return HammingClassification(table, representatives, maximal)


__all__ = ["HammingClassification", "classify_hamming"]
