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
"""Classification of additive codes whose nonzero Doob weights lie in a
whitelist, such as the two-weight codes of the diameter-9 Doob graphs."""
import time
from typing import Dict, List, Optional, Sequence, Tuple

from doobcodes.alphabet.shape import Shape
from doobcodes.campaigns.extensions import CampaignAmbient, classify_levels
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.config.budgets import Budgets
from doobcodes.config.search_config import SearchConfig
from doobcodes.constants import DEFAULT_THREADS
from doobcodes.enums import SeedOrder
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)

# (size, (delta, gamma))
BucketKey = Tuple[int, Tuple[int, int]]

# Ambients of diameter 9 with 2m + n'' >= 6, and D(0, 9+0)
DIAMETER9_AMBIENTS: Tuple[Shape, ...] = tuple(
    Shape.of(m, n_prime, n_double_prime)
    for m, n_prime, n_double_prime in (
        (4, 1, 0),
        (4, 0, 1),
        (3, 3, 0),
        (3, 2, 1),
        (3, 1, 2),
        (3, 0, 3),
        (2, 3, 2),
        (2, 2, 3),
        (2, 1, 4),
        (2, 0, 5),
        (1, 3, 4),
        (1, 2, 5),
        (1, 1, 6),
        (1, 0, 7),
        (0, 3, 6),
        (0, 2, 7),
        (0, 1, 8),
        (0, 0, 9),
        (0, 9, 0),
    )
)


def classify_weight_constrained(
    config: SearchConfig,
) -> Dict[BucketKey, List[AdditiveCode]]:
    """Classifies the codes of `config.shape` with nonzero weights in
    `config.weights` and size at most `config.max_size`.

    The search grows codes from the trivial code one generator at a time
    and stops when no class extends.

    Returns:
        Class representatives bucketed by size and group type, for every
        size from 2 on; buckets are sorted by size, then by type with more
        order-4 generators first.
    """
    start = time.time()
    campaign = CampaignAmbient(config)
    levels = classify_levels([AdditiveCode.trivial(config.shape)], campaign)
    buckets: Dict[BucketKey, List[AdditiveCode]] = {}
    for level in levels:
        for code in level.classes:
            if code.size > 1:
                key = (code.size, code.group_type)
                buckets.setdefault(key, []).append(code)
    logger.info(
        "Weights %s in `%s`: %d classes, largest size %d (%s).",
        ",".join(str(w) for w in config.weights or ()),
        config.shape,
        sum(len(codes) for codes in buckets.values()),
        max((size for size, _ in buckets), default=1),
        get_human_readable_time(time.time() - start),
    )
    return dict(
        sorted(buckets.items(), key=lambda item: (item[0][0], -item[0][1][0]))
    )


def classify_doob_two_weight(
    shape: Shape,
    weights: Sequence[int] = (6, 8),
    max_size: Optional[int] = 64,
    budgets: Optional[Budgets] = None,
    threads: int = DEFAULT_THREADS,
    seed_order: SeedOrder = SeedOrder.CANONICAL,
) -> Dict[BucketKey, List[AdditiveCode]]:
    """Classifies the additive codes of a Doob ambient with the given
    nonzero weights.

    Args:
        shape: The ambient.
        weights: Allowed nonzero Doob weights.
        max_size: Codes of this size are not extended further.
        budgets: Limits, `DEFAULT_BUDGETS` by default.
        threads: Worker threads, 0 meaning one per CPU.
        seed_order: Order in which classes are extended.

    Returns:
        Representatives by `(size, (delta, gamma))`.
    """
    config = SearchConfig(
        min_distance=min(weights),
        weights=tuple(weights),
        max_size=max_size,
        shape=shape,
        threads=threads,
        seed_order=seed_order,
        **({"budgets": budgets} if budgets is not None else {}),
    )
    return classify_weight_constrained(config)


def classify_diameter9(
    weights: Sequence[int] = (6, 8),
    max_size: Optional[int] = 64,
    shapes: Sequence[Shape] = DIAMETER9_AMBIENTS,
    budgets: Optional[Budgets] = None,
    threads: int = DEFAULT_THREADS,
) -> Dict[Shape, Dict[BucketKey, List[AdditiveCode]]]:
    """Runs `classify_doob_two_weight` over the diameter-9 ambients."""
    return {
        shape: classify_doob_two_weight(
            shape, weights, max_size, budgets, threads
        )
        for shape in shapes
    }


__all__ = [
    "BucketKey",
    "DIAMETER9_AMBIENTS",
    "classify_diameter9",
    "classify_doob_two_weight",
    "classify_weight_constrained",
]
