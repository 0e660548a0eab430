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
"""Staged search for cyclic additive GF(4) codes.

A cyclic additive code contains, with every codeword, the additive span of
its cyclic shifts. Stage 1 closes single seed words, one per orbit under
shifts and nonzero scalars; stage 2 adds up pairs of stage-1 closures.
"""
import itertools
import time
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from doobcodes.alphabet.gf4 import GF4
from doobcodes.alphabet.shape import Shape
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.weights import min_distance
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import Metric, SeedOrder
from doobcodes.equivalence.class_store import ClassStore
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)

CodePredicate = Callable[[AdditiveCode], bool]

_DIGITS = np.arange(4)
# row s: digit d multiplied by the nonzero scalar s
_SCALE = np.asarray(GF4(_DIGITS)[None, :] * GF4(_DIGITS[1:])[:, None])


def words_of_weight(length: int, weight: int) -> "np.ndarray":
    """All words of `GF(4)^length` with `weight` nonzero digits."""
    supports = list(itertools.combinations(range(length), weight))
    values = np.array(list(itertools.product((1, 2, 3), repeat=weight)))
    words = np.zeros((len(supports) * len(values), length), dtype=np.int64)
    for number, support in enumerate(supports):
        block = slice(number * len(values), (number + 1) * len(values))
        words[block][:, list(support)] = values
    return words


def _indices(words: "np.ndarray") -> "np.ndarray":
    powers = 4 ** np.arange(words.shape[1] - 1, -1, -1, dtype=np.int64)
    return words @ powers


def orbit_representatives(words: "np.ndarray") -> "np.ndarray":
    """The words that are smallest in their orbit under cyclic shifts and
    nonzero scalars, coordinate 0 being the most significant digit."""
    words = np.asarray(words, dtype=np.int64)
    own = _indices(words)
    smallest = own.copy()
    for scale in _SCALE:
        scaled = scale[words]
        for steps in range(words.shape[1]):
            np.minimum(
                smallest, _indices(np.roll(scaled, steps, axis=1)), out=smallest
            )
    return words[own == smallest]


def cyclic_closure(word: Sequence[int]) -> AdditiveCode:
    """The additive span of all cyclic shifts of a GF(4) word."""
    word = np.asarray(word, dtype=np.int64)
    shifts = [np.roll(word, steps) for steps in range(word.shape[0])]
    return AdditiveCode.from_digits(Shape.gf4(word.shape[0]), shifts)


def _acceptable(
    code: AdditiveCode,
    distance: int,
    prune: Optional[CodePredicate],
    budgets: Budgets,
) -> bool:
    if prune is not None and not prune(code):
        return False
    return min_distance(code, Metric.HAMMING, budgets) >= distance


def search_cyclic(
    length: int,
    dimension: int,
    distance: int,
    seed_weights: Optional[Iterable[int]] = None,
    prune: Optional[CodePredicate] = None,
    accept: Optional[CodePredicate] = None,
    first_only: bool = False,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> List[AdditiveCode]:
    """Finds cyclic additive `(length, 2^dimension, >= distance)_4` codes.

    Args:
        length: Code length `n`.
        dimension: Binary dimension of the codes sought.
        distance: Lower bound on the minimum Hamming distance.
        seed_weights: Weights of the seed words; `distance..length` by
            default.
        prune: Property inherited by subcodes, such as self-orthogonality;
            closures without it are dropped in both stages.
        accept: Extra test for codes of the target dimension.
        first_only: Stop at the first code found.
        budgets: `orbit_pairs` caps the second stage; `span` caps codeword
            enumeration.

    Returns:
        One code per equivalence class, in canonical order.

    Raises:
        BudgetExceededError: if the second stage has too many pairs.
    """
    start = time.time()
    weights = (
        list(seed_weights)
        if seed_weights is not None
        else list(range(distance, length + 1))
    )
    seeds = np.concatenate(
        [orbit_representatives(words_of_weight(length, w)) for w in weights]
    )
    closures: Dict[bytes, AdditiveCode] = {}
    for seed in seeds:
        closure = cyclic_closure(seed)
        if closure.dimension <= dimension:
            closures.setdefault(closure.to_bytes(), closure)
    survivors = [
        code
        for code in closures.values()
        if _acceptable(code, distance, prune, budgets)
    ]
    logger.info(
        "Cyclic search (%d, 2^%d, %d): %d seed orbits, %d closures, %d "
        "survive (%s).",
        length,
        dimension,
        distance,
        len(seeds),
        len(closures),
        len(survivors),
        get_human_readable_time(time.time() - start),
    )
    store = ClassStore(budgets)

    def found(code: AdditiveCode) -> bool:
        if accept is None or accept(code):
            store.add(code)
            return first_only
        return False

    for code in survivors:
        if code.dimension == dimension and found(code):
            return store.classes(SeedOrder.CANONICAL)

    by_dimension: Dict[int, List[AdditiveCode]] = {}
    for code in survivors:
        by_dimension.setdefault(code.dimension, []).append(code)
    pairs = []
    for low in sorted(by_dimension):
        high = dimension - low
        if low > high or high not in by_dimension:
            continue
        if low == high:
            group = by_dimension[low]
            pairs += list(itertools.combinations(group, 2))
        else:
            pairs += list(
                itertools.product(by_dimension[low], by_dimension[high])
            )
    budgets.check("orbit_pairs", len(pairs))
    sums: Dict[bytes, AdditiveCode] = {}
    for first, second in pairs:
        total = first.with_rows(second.generator_rows())
        if total.dimension != dimension or total.to_bytes() in sums:
            continue
        sums[total.to_bytes()] = total
        if _acceptable(total, distance, prune, budgets) and found(total):
            break
    logger.info(
        "Cyclic search (%d, 2^%d, %d): %d pairs, %d sums, %d classes (%s).",
        length,
        dimension,
        distance,
        len(pairs),
        len(sums),
        len(store),
        get_human_readable_time(time.time() - start),
    )
    return store.classes(SeedOrder.CANONICAL)


__all__ = [
    "CodePredicate",
    "cyclic_closure",
    "orbit_representatives",
    "search_cyclic",
    "words_of_weight",
]
