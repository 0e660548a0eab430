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

from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, Field, validator

from doobcodes.alphabet.shape import Shape
from doobcodes.config.budgets import Budgets
from doobcodes.constants import DEFAULT_THREADS
from doobcodes.enums import SeedOrder
from doobcodes.utils import yaml_utils


class SearchConfig(BaseModel):
    """Parameters of one classification campaign.

    Attributes:
        min_distance: Every nonzero codeword weight must be at least this.
        weights: Optional whitelist of allowed nonzero weights.
        max_size: Largest code size the search grows codes to.
        shape: Ambient shape; Hamming campaigns grow it by Bi coordinates.
        target: Optional `(N_target, K_target)`; at length `n` a class of
            binary dimension `k` is only worth extending when
            `k + 2 (N_target - n) >= K_target`.
        budgets: Limits of the exponential operations.
        threads: Worker threads, 0 meaning one per CPU.
        seed_order: Order in which stored classes are expanded.
    """

    min_distance: int = 1
    weights: Optional[Tuple[int, ...]] = None
    max_size: Optional[int] = None
    shape: Shape = Shape()
    target: Optional[Tuple[int, int]] = None
    budgets: Budgets = Field(default_factory=Budgets)
    threads: int = DEFAULT_THREADS
    seed_order: SeedOrder = SeedOrder.CANONICAL

    @validator("min_distance")
    def _distance_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("min_distance must be at least 1")
        return value

    @validator("weights")
    def _weights_sorted(
        cls, value: Optional[Tuple[int, ...]]
    ) -> Optional[Tuple[int, ...]]:
        if value is None:
            return value
        if not value or min(value) < 1:
            raise ValueError("weights must be a nonempty set of positive ints")
        return tuple(sorted(set(value)))

    @validator("threads")
    def _threads_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("threads must be nonnegative")
        return value

    def allows(self, weight: int) -> bool:
        """Whether a nonzero codeword may have this weight."""
        if weight < self.min_distance:
            return False
        return self.weights is None or weight in self.weights

    def worth_extending(self, length: int, dimension: int) -> bool:
        """Dimension-reachability cut; always true without a target."""
        if self.target is None:
            return True
        n_target, k_target = self.target
        return dimension + 2 * (n_target - length) >= k_target

    @classmethod
    def from_yaml(
        cls, path: str, overrides: Optional[Dict[str, Any]] = None
    ) -> "SearchConfig":
        """Reads a configuration file, explicit overrides taking precedence.

        Args:
            path: YAML file with the field names of this model at top level;
                `shape` may be a mapping or a list `[m, n', n'']`.
            overrides: Values that replace the file's.

        Raises:
            FileNotFoundError: if the file does not exist.
            pydantic.ValidationError: on invalid values.
        """
        values = yaml_utils.read_yaml(path) or {}
        if not isinstance(values, dict):
            raise ValueError(f"{path} does not contain a mapping.")
        shape = values.get("shape")
        if isinstance(shape, (list, tuple)):
            values["shape"] = Shape.of(*shape)
        values.update(
            {k: v for k, v in (overrides or {}).items() if v is not None}
        )
        return cls(**values)

    class Config:
        """Pydantic configuration class."""

        validate_assignment = True
        extra = "forbid"
