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

from typing import Dict

from pydantic import BaseModel, validator

from doobcodes.constants import (
    DEFAULT_AMBIENT_BUDGET,
    DEFAULT_CANONICAL_STATE_BUDGET,
    DEFAULT_COSET_INDEX_BUDGET,
    DEFAULT_GRAPH_ORDER_BUDGET,
    DEFAULT_ORBIT_PAIR_BUDGET,
    DEFAULT_SPAN_BUDGET,
)
from doobcodes.exceptions import BudgetExceededError


class Budgets(BaseModel):
    """Upper limits of the exponential parts of the library.

    Attributes:
        span: Maximal number of codewords a code may be expanded to.
        ambient: Maximal number of vertices of an ambient searched by
            breadth-first search.
        coset_index: Maximal number of cosets of a coset graph.
        graph_order: Maximal order of a graph given to canonical labeling.
        orbit_pairs: Maximal number of second-stage seed combinations of a
            cyclic search.
        canonical_states: Maximal number of partial labelings kept alive by
            the canonical form search.
    """

    span: int = DEFAULT_SPAN_BUDGET
    ambient: int = DEFAULT_AMBIENT_BUDGET
    coset_index: int = DEFAULT_COSET_INDEX_BUDGET
    graph_order: int = DEFAULT_GRAPH_ORDER_BUDGET
    orbit_pairs: int = DEFAULT_ORBIT_PAIR_BUDGET
    canonical_states: int = DEFAULT_CANONICAL_STATE_BUDGET

    @validator("*")
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("budgets must be positive")
        return value

    def check(self, budget: str, requested: int) -> None:
        """Raises if `requested` exceeds the named budget.

        Raises:
            BudgetExceededError: if the request is over the limit.
            AttributeError: for an unknown budget name.
        """
        limit = getattr(self, budget.replace("-", "_"))
        if requested > limit:
            raise BudgetExceededError(budget, requested, limit)

    def with_overrides(self, overrides: Dict[str, int]) -> "Budgets":
        """Copy with some limits replaced; keys may use dashes."""
        values = self.dict()
        for key, value in overrides.items():
            name = key.replace("-", "_")
            if name not in values:
                raise ValueError(
                    f"Unknown budget `{key}`, choose one of "
                    f"{', '.join(values)}."
                )
            values[name] = value
        return Budgets(**values)

    class Config:
        """Pydantic configuration class."""

        validate_assignment = True
        extra = "forbid"


DEFAULT_BUDGETS = Budgets()
