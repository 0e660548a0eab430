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

import math
from typing import Dict, List, Tuple, Union

import numpy as np
from pydantic import BaseModel, validator

from doobcodes.alphabet.vectors import weights_of_rows
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import Metric
from doobcodes.exceptions import InconsistentDistributionError
from doobcodes.utils.string_utils import format_distribution, parse_distribution


class WeightDistribution(BaseModel):
    """Numbers `A_0, ..., A_D` of codewords of each weight.

    Attributes:
        diameter: Largest possible weight `D`.
        counts: `D + 1` nonnegative counts.
    """

    diameter: int
    counts: Tuple[int, ...]

    @validator("counts")
    def _counts_fit(
        cls, value: Tuple[int, ...], values: Dict[str, int]
    ) -> Tuple[int, ...]:
        diameter = values.get("diameter")
        if diameter is not None and len(value) != diameter + 1:
            raise ValueError(
                f"{len(value)} counts given for diameter {diameter}"
            )
        if any(count < 0 for count in value):
            raise ValueError("counts must be nonnegative")
        if not value or value[0] < 1:
            raise ValueError("A_0 must be at least 1")
        return value

    class Config:
        """Pydantic configuration class."""

        frozen = True

    @classmethod
    def from_dict(
        cls, counts: Dict[int, int], diameter: int
    ) -> "WeightDistribution":
        """From a sparse `{weight: count}` mapping."""
        if counts and max(counts) > diameter:
            raise ValueError(
                f"Weight {max(counts)} exceeds the diameter {diameter}."
            )
        return cls(
            diameter=diameter,
            counts=tuple(counts.get(w, 0) for w in range(diameter + 1)),
        )

    @classmethod
    def parse(cls, text: str, diameter: int) -> "WeightDistribution":
        """From `w:count` items separated by commas or spaces."""
        return cls.from_dict(parse_distribution(text), diameter)

    @property
    def total(self) -> int:
        """Sum of all counts, the code size."""
        return sum(self.counts)

    @property
    def nonzero_weights(self) -> Tuple[int, ...]:
        """Weights `w > 0` with `A_w > 0`."""
        return tuple(w for w, a in enumerate(self.counts) if w and a)

    def as_dict(self) -> Dict[int, int]:
        """Sparse mapping of the nonzero counts."""
        return {w: a for w, a in enumerate(self.counts) if a}

    def __str__(self) -> str:
        return format_distribution(self.as_dict())


class IntersectionArray(BaseModel):
    """Intersection array `{b_0, ..., b_{rho-1}; c_1, ..., c_rho}`."""

    b: Tuple[int, ...]
    c: Tuple[int, ...]

    @validator("c")
    def _same_length(
        cls, value: Tuple[int, ...], values: Dict[str, Tuple[int, ...]]
    ) -> Tuple[int, ...]:
        if "b" in values and len(values["b"]) != len(value):
            raise ValueError("b and c must have the same length")
        return value

    class Config:
        """Pydantic configuration class."""

        frozen = True

    @property
    def rho(self) -> int:
        """Covering radius."""
        return len(self.b)

    def __str__(self) -> str:
        return (
            "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c))
            + "}"
        )


class NotCompletelyRegular(BaseModel):
    """Why a distance partition is not equitable.

    Attributes:
        vertex: Digits of the first violating vertex.
        distance: Its distance from the code.
        parameter: `"b"` or `"c"`.
        expected: Count seen on the first vertex of the same class.
        found: Count at the violating vertex.
    """

    vertex: Tuple[int, ...]
    distance: int
    parameter: str
    expected: int
    found: int

    class Config:
        """Pydantic configuration class."""

        frozen = True

    def __str__(self) -> str:
        return (
            f"not completely regular: vertex {self.vertex} at distance "
            f"{self.distance} has {self.parameter}={self.found}, "
            f"expected {self.expected}"
        )


def metric_diameter(code: AdditiveCode, metric: Metric) -> int:
    """Largest weight under a metric: Doob diameter or number of
    coordinates."""
    if metric == Metric.DOOB:
        return code.shape.diameter
    return code.shape.length


def codeword_weights(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> "np.ndarray":
    """Weight of every codeword, in codeword order."""
    return weights_of_rows(code.shape, code.codewords(budgets), metric)


def weight_distribution(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> WeightDistribution:
    """Weight distribution of a code.

    Raises:
        BudgetExceededError: if the code is larger than the span budget.
    """
    diameter = metric_diameter(code, metric)
    counts = np.bincount(
        codeword_weights(code, metric, budgets), minlength=diameter + 1
    )
    return WeightDistribution(
        diameter=diameter, counts=tuple(int(a) for a in counts)
    )


def min_distance(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Union[int, float]:
    """Smallest nonzero weight; `math.inf` for the trivial code."""
    if code.size == 1:
        return math.inf
    weights = codeword_weights(code, metric, budgets)
    return int(weights[weights > 0].min())


def krawtchouk(j: int, i: int, n: int, q: int = 4) -> int:
    """Krawtchouk polynomial `K_j(i)` of `H(n, q)`."""
    return sum(
        (-1) ** s
        * (q - 1) ** (j - s)
        * math.comb(i, s)
        * math.comb(n - i, j - s)
        for s in range(0, j + 1)
    )


def macwilliams(
    distribution: WeightDistribution, diameter: int, code_size: int
) -> WeightDistribution:
    """Dual weight distribution by the MacWilliams transform.

    The transform is exact integer arithmetic; the quaternary Krawtchouk
    polynomials serve Hamming and Doob schemes alike.

    Args:
        distribution: Weight distribution `A` of a code.
        diameter: `n` of the scheme.
        code_size: `|C|`.

    Raises:
        InconsistentDistributionError: if `sum A != |C|` or an output count
            is negative or not an integer.
    """
    counts = list(distribution.counts) + [0] * (
        diameter + 1 - len(distribution.counts)
    )
    if len(counts) != diameter + 1:
        raise InconsistentDistributionError(
            f"A distribution of diameter {distribution.diameter} does not fit "
            f"a scheme of diameter {diameter}."
        )
    if sum(counts) != code_size:
        raise InconsistentDistributionError(
            f"The distribution sums to {sum(counts)}, not to the code size "
            f"{code_size}."
        )
    dual: List[int] = []
    for j in range(diameter + 1):
        numerator = sum(
            a * krawtchouk(j, i, diameter) for i, a in enumerate(counts) if a
        )
        quotient, remainder = divmod(numerator, code_size)
        if remainder or quotient < 0:
            raise InconsistentDistributionError(
                f"B_{j} = {numerator}/{code_size} is not a nonnegative "
                f"integer."
            )
        dual.append(quotient)
    return WeightDistribution(diameter=diameter, counts=tuple(dual))
