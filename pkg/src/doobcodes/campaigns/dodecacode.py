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
"""The dodecacode, its puncturing and the unique completion of the even
part of the punctured code's dual."""
from typing import Dict, NamedTuple, Optional, Union

from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.vectors import MixedVector
from doobcodes.campaigns.cyclic import cyclic_closure, search_cyclic
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.ambient import intersection_array
from doobcodes.codes.duality import (
    is_self_dual,
    is_self_orthogonal,
    trace_hermitian_dual,
)
from doobcodes.codes.operations import is_cyclic, is_f4_linear, puncture
from doobcodes.codes.weights import (
    IntersectionArray,
    NotCompletelyRegular,
    WeightDistribution,
    codeword_weights,
    min_distance,
    weight_distribution,
)
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import InnerProductForm, Metric
from doobcodes.exceptions import PreconditionError, ShapeMismatchError
from doobcodes.logger import get_logger

logger = get_logger(__name__)

DODECACODE_LENGTH = 12
DODECACODE_DISTANCE = 6
# w10100100101; w is the digit 2
DODECACODE_SEED = (2, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1)
PUNCTURED_DUAL_DISTRIBUTION: Dict[int, int] = {0: 1, 6: 198, 8: 495, 10: 330}
PUNCTURED_ARRAY = IntersectionArray(b=(33, 30, 15), c=(1, 2, 15))

TH = InnerProductForm.TRACE_HERMITIAN


def dodecacode_seed_code() -> AdditiveCode:
    """The cyclic code spanned by the 12 shifts of `w10100100101`."""
    return cyclic_closure(DODECACODE_SEED)


def is_dodecacode(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Cyclic, trace-Hermitian self-dual, of length 12 and distance 6."""
    return (
        code.shape == Shape.gf4(DODECACODE_LENGTH)
        and is_cyclic(code)
        and is_self_dual(code, TH)
        and min_distance(code, Metric.HAMMING, budgets) == DODECACODE_DISTANCE
    )


def search_dodecacode(
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Optional[AdditiveCode]:
    """Searches a cyclic trace-Hermitian self-dual `(12, 2^12, 6)_4` code.

    Seeds are the words of weight 6 and 12 up to shifts and scalars;
    closures that are not self-orthogonal are pruned.

    Returns:
        The first code found, or None when the search ends without one.

    Raises:
        BudgetExceededError: if the pair stage exceeds `orbit_pairs`.
    """
    found = search_cyclic(
        DODECACODE_LENGTH,
        DODECACODE_LENGTH,
        DODECACODE_DISTANCE,
        seed_weights=(DODECACODE_DISTANCE, DODECACODE_LENGTH),
        prune=lambda code: is_self_orthogonal(code, TH),
        accept=lambda code: is_self_dual(code, TH),
        first_only=True,
        budgets=budgets,
    )
    if not found:
        logger.warning("No cyclic self-dual (12, 2^12, 6)_4 code was found.")
        return None
    return found[0]


class PuncturedReport(NamedTuple):
    """Properties of a punctured dodecacode.

    Attributes:
        punctured: The code with one coordinate deleted.
        distance: Its minimum Hamming distance.
        f4_linear: Whether it is closed under multiplication by `w`.
        dual_distribution: Hamming weight distribution of its
            trace-Hermitian dual.
    """

    punctured: AdditiveCode
    distance: int
    f4_linear: bool
    dual_distribution: WeightDistribution

    @property
    def as_expected(self) -> bool:
        return (
            self.distance == DODECACODE_DISTANCE - 1
            and not self.f4_linear
            and self.dual_distribution.as_dict() == PUNCTURED_DUAL_DISTRIBUTION
        )


def puncture_dodecacode(
    code: AdditiveCode,
    coordinate: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> PuncturedReport:
    """Punctures a code and measures the result."""
    punctured = puncture(code, coordinate)
    report = PuncturedReport(
        punctured=punctured,
        distance=int(min_distance(punctured, Metric.HAMMING, budgets)),
        f4_linear=is_f4_linear(punctured),
        dual_distribution=weight_distribution(
            trace_hermitian_dual(punctured), Metric.HAMMING, budgets
        ),
    )
    logger.info(
        "Punctured at %d: distance %d, F4-linear %s, dual distribution %s.",
        coordinate,
        report.distance,
        report.f4_linear,
        report.dual_distribution,
    )
    return report


def punctured_intersection_array(
    punctured: AdditiveCode, budgets: Optional[Budgets] = None
) -> Union[IntersectionArray, NotCompletelyRegular]:
    """Intersection array of a punctured dodecacode, searched over all
    `4^11` vertices.

    The code has covering radius 3, its dual having the three nonzero
    weights 6, 8 and 10.
    """
    if budgets is None:
        budgets = DEFAULT_BUDGETS.with_overrides(
            {"ambient": punctured.shape.ambient_order}
        )
    return intersection_array(punctured, Metric.HAMMING, budgets)


def verify_unique_completion(
    even: AdditiveCode,
    word: MixedVector,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> AdditiveCode:
    """Completes an even self-orthogonal code by one word to a self-dual
    code.

    Args:
        even: A code whose codewords have even Hamming weight and are
            pairwise trace-Hermitian orthogonal.
        word: A vector outside the code, orthogonal to it.
        budgets: Limits for codeword enumeration.

    Returns:
        `N = even + <word>`, trace-Hermitian self-dual.

    Raises:
        ShapeMismatchError: if the word lives elsewhere.
        IncompatibleFormError: unless the code lives in `GF(4)^n`.
        PreconditionError: if a condition on the inputs fails or `N` is
            not self-dual.
    """
    if word.shape != even.shape:
        raise ShapeMismatchError(
            f"The word lives in {word.shape}, the code in {even.shape}."
        )
    if not is_self_orthogonal(even, TH):
        raise PreconditionError("The code is not self-orthogonal.")
    if (codeword_weights(even, Metric.HAMMING, budgets) % 2).any():
        raise PreconditionError("The code has codewords of odd weight.")
    if word in even:
        raise PreconditionError("The word is a codeword.")
    completed = even.with_rows(word.components[None, :])
    if not is_self_orthogonal(completed, TH):
        raise PreconditionError("The word is not orthogonal to the code.")
    if completed.size**2 != completed.shape.ambient_order:
        raise PreconditionError(
            f"The completion has {completed.size} codewords, a self-dual "
            f"code in {completed.shape} has "
            f"{2 ** completed.shape.length}."
        )
    return completed


__all__ = [
    "DODECACODE_SEED",
    "PUNCTURED_ARRAY",
    "PUNCTURED_DUAL_DISTRIBUTION",
    "PuncturedReport",
    "dodecacode_seed_code",
    "is_dodecacode",
    "puncture_dodecacode",
    "punctured_intersection_array",
    "search_dodecacode",
    "verify_unique_completion",
]
