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

from typing import Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, validator

from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.vectors import (
    MixedVector,
    rows_of_symbols,
    symbols_of_rows,
)
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.enums import CoordKind
from doobcodes.equivalence.cell_groups import cell_group
from doobcodes.exceptions import ShapeMismatchError


class MonomialMap(BaseModel):
    """A block-respecting coordinate permutation with per-coordinate cell
    maps.

    The image of a vector `v` is `g(v)[t] = h_t(v[perm[t]])`, where `h_t` is
    the cell map `cells[t]` of the kind of coordinate `t`.

    Attributes:
        shape: The shape acted on.
        perm: Source coordinate of each target coordinate.
        cells: Cell map index of each target coordinate.
    """

    shape: Shape
    perm: Tuple[int, ...]
    cells: Tuple[int, ...]

    @validator("perm")
    def _block_permutation(
        cls, value: Tuple[int, ...], values: Dict[str, Shape]
    ) -> Tuple[int, ...]:
        shape = values.get("shape")
        if shape is None:
            return value
        if sorted(value) != list(range(shape.length)):
            raise ValueError(f"{value} is not a permutation of {shape.length}")
        kinds = shape.kinds
        if any(kinds[t] != kinds[s] for t, s in enumerate(value)):
            raise ValueError("coordinates may only move within their block")
        return value

    @validator("cells")
    def _cells_in_range(
        cls, value: Tuple[int, ...], values: Dict[str, Shape]
    ) -> Tuple[int, ...]:
        shape = values.get("shape")
        if shape is None:
            return value
        if len(value) != shape.length:
            raise ValueError("one cell map per coordinate is needed")
        for kind, cell in zip(shape.kinds, value):
            if not 0 <= cell < len(cell_group(kind)):
                raise ValueError(f"cell map {cell} out of range for {kind}")
        return value

    class Config:
        """Pydantic configuration class."""

        frozen = True

    @classmethod
    def identity(cls, shape: Shape) -> "MonomialMap":
        """The identity map."""
        return cls(
            shape=shape,
            perm=tuple(range(shape.length)),
            cells=(0,) * shape.length,
        )

    @classmethod
    def random(
        cls, shape: Shape, rng: Optional[np.random.Generator] = None
    ) -> "MonomialMap":
        """A uniformly random map."""
        rng = rng or np.random.default_rng()
        perm = list(range(shape.length))
        for kind in CoordKind:
            block = list(shape.coordinates(kind))
            shuffled = rng.permutation(block) if block else []
            for target, source in zip(block, shuffled):
                perm[target] = int(source)
        cells = tuple(
            int(rng.integers(len(cell_group(kind)))) for kind in shape.kinds
        )
        return cls(shape=shape, perm=tuple(perm), cells=cells)

    def block_permutation(self, kind: CoordKind) -> Tuple[int, ...]:
        """Permutation of one block in block-local indices."""
        block = self.shape.coordinates(kind)
        return tuple(self.perm[t] - block.start for t in block)

    def then(self, other: "MonomialMap") -> "MonomialMap":
        """The map "apply `self`, then `other`".

        Raises:
            ShapeMismatchError: if the shapes differ.
        """
        if other.shape != self.shape:
            raise ShapeMismatchError(
                f"Cannot compose maps of {self.shape} and {other.shape}."
            )
        kinds = self.shape.kinds
        perm = tuple(self.perm[s] for s in other.perm)
        cells = tuple(
            int(cell_group(kinds[t]).compose[self.cells[s], other.cells[t]])
            for t, s in enumerate(other.perm)
        )
        return MonomialMap(shape=self.shape, perm=perm, cells=cells)

    def inverse(self) -> "MonomialMap":
        """The inverse map."""
        kinds = self.shape.kinds
        perm = [0] * self.shape.length
        cells = [0] * self.shape.length
        for t, s in enumerate(self.perm):
            perm[s] = t
            cells[s] = int(cell_group(kinds[t]).inverse[self.cells[t]])
        return MonomialMap(
            shape=self.shape, perm=tuple(perm), cells=tuple(cells)
        )

    def apply_to_digits(self, digits: "np.ndarray") -> "np.ndarray":
        """Images of rows of per-coordinate digits."""
        digits = np.asarray(digits, dtype=np.int64)
        moved = digits[..., list(self.perm)]
        result = np.empty_like(moved)
        for t, kind in enumerate(self.shape.kinds):
            result[..., t] = cell_group(kind).maps[self.cells[t]][moved[..., t]]
        return result

    def apply_to_rows(self, rows: "np.ndarray") -> "np.ndarray":
        """Images of rows of stored components."""
        rows = np.asarray(rows)
        if rows.ndim == 1:
            rows = rows[None, :]
        return rows_of_symbols(
            self.shape, self.apply_to_digits(symbols_of_rows(self.shape, rows))
        )

    def __call__(self, vector: MixedVector) -> MixedVector:
        if vector.shape != self.shape:
            raise ShapeMismatchError(
                f"A map of {self.shape} cannot act on {vector.shape}."
            )
        return MixedVector(self.shape, self.apply_to_rows(vector.components)[0])


def apply(monomial: MonomialMap, code: AdditiveCode) -> AdditiveCode:
    """Image of a code, re-echelonized.

    Raises:
        ShapeMismatchError: if the map and the code have different shapes.
    """
    if monomial.shape != code.shape:
        raise ShapeMismatchError(
            f"A map of {monomial.shape} cannot act on a code in {code.shape}."
        )
    rows = monomial.apply_to_rows(code.generator_rows())
    return AdditiveCode(code.shape, rows)


def compose(first: MonomialMap, second: MonomialMap) -> MonomialMap:
    """The map "apply `first`, then `second`"."""
    return first.then(second)
