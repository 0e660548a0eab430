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
"""One-generator extensions of additive codes.

Every additive code of binary dimension `k + 1` contains a subcode of
dimension `k` as a subgroup of index 2, so a code is grown by adding one
coset `x + C` with `2x` in `C`. Breadth-first levels of a campaign are thus
exactly the binary dimensions.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from typing import (
    Callable,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.ambient import UNREACHED, Ambient
from doobcodes.config.search_config import SearchConfig
from doobcodes.enums import Metric
from doobcodes.equivalence.canonical import (
    InvariantKey,
    canonical_form,
    invariant_key,
)
from doobcodes.equivalence.class_store import ClassStore
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)


class CampaignAmbient:
    """An ambient together with the per-vertex data every extension needs.

    Attributes:
        ambient: The index space.
        weights: Doob weight of every vertex.
        allowed: For every weight, whether a nonzero codeword may have it.
    """

    def __init__(self, config: SearchConfig) -> None:
        self.config = config
        self.ambient = Ambient(config.shape, Metric.DOOB, config.budgets)
        self.weights = self.ambient.distances(np.zeros(1, dtype=np.int64))
        top = int(self.weights.max())
        self.allowed = np.array(
            [weight == 0 or config.allows(weight) for weight in range(top + 1)]
        )

    @property
    def whitelisted(self) -> bool:
        return self.config.weights is not None


def extension_vectors(
    code: AdditiveCode, campaign: CampaignAmbient
) -> "np.ndarray":
    """Coset representatives `x` such that `C + <x>` is an index-2
    supergroup of the code satisfying the weight constraints.

    Returns:
        Sorted vertex indices, one per coset `x + C`, each the smallest
        index of its coset.
    """
    ambient = campaign.ambient
    codewords = code.codewords(campaign.config.budgets)
    sources = ambient.indices_of_rows(codewords)
    dist = ambient.distances(sources, campaign.config.min_distance - 1)
    candidates = np.flatnonzero(dist == UNREACHED)
    member = np.zeros(ambient.order, dtype=bool)
    member[sources] = True
    candidates = candidates[member[ambient.double(candidates)]]
    if campaign.whitelisted:
        for row in codewords:
            if not candidates.size:
                break
            moved = ambient.translate(candidates, row)
            candidates = candidates[campaign.allowed[campaign.weights[moved]]]
    if not candidates.size:
        return candidates
    representatives = candidates.copy()
    for row in codewords:
        np.minimum(
            representatives,
            ambient.translate(candidates, row),
            out=representatives,
        )
    return np.unique(representatives)


def extend(
    code: AdditiveCode, campaign: CampaignAmbient
) -> List[AdditiveCode]:
    """All one-generator extensions of a code, one per added coset."""
    indices = extension_vectors(code, campaign)
    if not indices.size:
        return []
    rows = campaign.ambient.rows_of_indices(indices)
    return [code.with_rows(row[None, :]) for row in rows]


class Growth(NamedTuple):
    """Result of extending the classes of one dimension.

    Attributes:
        children: Classes of the next dimension, one representative each.
        maximal: Parents without any extension.
        candidates: Number of children before equivalence dedupe.
    """

    children: ClassStore
    maximal: List[AdditiveCode]
    candidates: int


class DimensionLevel(NamedTuple):
    """Classes of one binary dimension found by `classify_levels`.

    Attributes:
        dimension: Binary dimension `k`, the code size being `2^k`.
        classes: One representative per class, in the store's order.
        maximal: Classes that have no extension.
        expanded: Whether the classes were extended at all; for levels that
            were not, `maximal` is empty and says nothing.
    """

    dimension: int
    classes: List[AdditiveCode]
    maximal: List[AdditiveCode]
    expanded: bool


def _children_with_keys(
    code: AdditiveCode, campaign: CampaignAmbient
) -> List[Tuple[AdditiveCode, InvariantKey]]:
    budgets = campaign.config.budgets
    return [
        (child, invariant_key(child, budgets))
        for child in extend(code, campaign)
    ]


def grow_level(
    parents: Sequence[AdditiveCode],
    campaign: CampaignAmbient,
    store: Optional[ClassStore] = None,
) -> Growth:
    """Extends every parent by one generator and keeps one code per class.

    Children and their invariant keys are produced by a thread pool in
    parent order; certificates of colliding keys are computed in parallel
    too, and the merge into the store is sequential, so the stored classes
    do not depend on the number of threads.

    Args:
        parents: Codes of one dimension.
        campaign: Ambient data and search configuration.
        store: Store to merge into; a new one by default.

    Returns:
        The children store, the maximal parents and the candidate count.
    """
    start = time.time()
    config = campaign.config
    store = store if store is not None else ClassStore(config.budgets)
    with ThreadPoolExecutor(max_workers=config.threads or None) as pool:
        produced = list(
            pool.map(lambda code: _children_with_keys(code, campaign), parents)
        )
        multiplicity: Dict[InvariantKey, int] = {}
        for children in produced:
            for _, key in children:
                multiplicity[key] = multiplicity.get(key, 0) + 1
        colliding = [
            child
            for children in produced
            for child, key in children
            if multiplicity[key] > 1 or store.would_collide(key)
        ]
        list(
            pool.map(
                lambda code: canonical_form(code, config.budgets), colliding
            )
        )
    maximal = [
        parent for parent, children in zip(parents, produced) if not children
    ]
    candidates = 0
    for children in produced:
        for child, key in children:
            candidates += 1
            store.add(child, key)
    logger.info(
        "Extended %d classes in `%s`: %d candidates, %d classes, %d maximal "
        "(%s).",
        len(parents),
        config.shape,
        candidates,
        len(store),
        len(maximal),
        get_human_readable_time(time.time() - start),
    )
    return Growth(children=store, maximal=maximal, candidates=candidates)


def classify_levels(
    seeds: Iterable[AdditiveCode],
    campaign: CampaignAmbient,
    expand: Optional[Callable[[int], bool]] = None,
) -> List[DimensionLevel]:
    """Breadth-first classification by binary dimension.

    Args:
        seeds: Starting codes of any dimensions; each joins the classes of
            its dimension before that dimension is extended.
        campaign: Ambient data and search configuration.
        expand: Which dimensions to extend; all of them by default. Codes
            of size `max_size` or more are never extended.

    Returns:
        One level per dimension `0, 1, ...`, ending with the first empty
        dimension above every seed.
    """
    config = campaign.config
    by_dimension: Dict[int, List[AdditiveCode]] = {}
    for seed in seeds:
        by_dimension.setdefault(seed.dimension, []).append(seed)
    top = max(by_dimension, default=0)
    store = ClassStore(config.budgets)
    levels: List[DimensionLevel] = []
    dimension = 0
    while True:
        store.update(by_dimension.get(dimension, []))
        classes = store.classes(config.seed_order)
        if not classes and dimension >= top:
            if not levels or levels[-1].expanded:
                levels.append(DimensionLevel(dimension, [], [], True))
            return levels
        extend_this = (expand is None or expand(dimension)) and (
            config.max_size is None or 2**dimension < config.max_size
        )
        if extend_this:
            growth = grow_level(classes, campaign)
            levels.append(
                DimensionLevel(dimension, classes, growth.maximal, True)
            )
            store = growth.children
        else:
            levels.append(DimensionLevel(dimension, classes, [], False))
            store = ClassStore(config.budgets)
        dimension += 1


__all__ = [
    "CampaignAmbient",
    "DimensionLevel",
    "Growth",
    "classify_levels",
    "extend",
    "extension_vectors",
    "grow_level",
]
