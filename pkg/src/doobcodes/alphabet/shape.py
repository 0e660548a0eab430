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

from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, validator

from doobcodes.enums import CoordKind


class Shape(BaseModel):
    """Ambient `(Z4^2)^m x (Z2^2)^n' x Z4^n''` of a Doob graph `D(m, n'+n'')`.

    Coordinates are ordered Quad block, Bi block, Single block. A Quad
    coordinate occupies two Z4 components, a Bi coordinate two components
    holding doubled bits, a Single coordinate one component.

    Attributes:
        m: Number of Quad coordinates.
        n_prime: Number of Bi coordinates.
        n_double_prime: Number of Single coordinates.
    """

    m: int = 0
    n_prime: int = 0
    n_double_prime: int = 0

    @validator("m", "n_prime", "n_double_prime")
    def _nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("coordinate counts must be nonnegative")
        return value

    class Config:
        """Pydantic configuration class."""

        # shapes key caches and buckets
        frozen = True

    @classmethod
    def of(cls, m: int, n_prime: int = 0, n_double_prime: int = 0) -> "Shape":
        """Positional constructor, `Shape.of(4, 1, 0)` is `D(4,1+0)`."""
        return cls(m=m, n_prime=n_prime, n_double_prime=n_double_prime)

    @classmethod
    def gf4(cls, n: int) -> "Shape":
        """The Hamming ambient `GF(4)^n` (as `D(0, n+0)`)."""
        return cls(m=0, n_prime=n, n_double_prime=0)

    @property
    def diameter(self) -> int:
        """Diameter `2m + n' + n''` of the Doob graph."""
        return 2 * self.m + self.n_prime + self.n_double_prime

    @property
    def length(self) -> int:
        """Number of coordinates."""
        return self.m + self.n_prime + self.n_double_prime

    @property
    def width(self) -> int:
        """Number of Z4 components of a vector."""
        return 2 * self.m + 2 * self.n_prime + self.n_double_prime

    @property
    def ambient_order(self) -> int:
        """Number of vectors, `4^diameter`."""
        return 4**self.diameter

    @property
    def is_gf4(self) -> bool:
        """True for pure Bi shapes, i.e. GF(4)^n under the Hamming metric."""
        return self.m == 0 and self.n_double_prime == 0

    @property
    def kinds(self) -> Tuple[CoordKind, ...]:
        """Kind of every coordinate, in coordinate order."""
        return (
            (CoordKind.QUAD,) * self.m
            + (CoordKind.BI,) * self.n_prime
            + (CoordKind.SINGLE,) * self.n_double_prime
        )

    @property
    def offsets(self) -> Tuple[int, ...]:
        """First component of every coordinate."""
        offsets: List[int] = []
        position = 0
        for kind in self.kinds:
            offsets.append(position)
            position += kind.components
        return tuple(offsets)

    def block(self, kind: CoordKind) -> Tuple[int, int]:
        """Component range `(start, stop)` of a coordinate block."""
        if kind == CoordKind.QUAD:
            return 0, 2 * self.m
        if kind == CoordKind.BI:
            return 2 * self.m, 2 * self.m + 2 * self.n_prime
        start = 2 * self.m + 2 * self.n_prime
        return start, start + self.n_double_prime

    def count(self, kind: CoordKind) -> int:
        """Number of coordinates of a kind."""
        return {
            CoordKind.QUAD: self.m,
            CoordKind.BI: self.n_prime,
            CoordKind.SINGLE: self.n_double_prime,
        }[kind]

    def coordinates(self, kind: CoordKind) -> range:
        """Indices of the coordinates of a kind."""
        start = {
            CoordKind.QUAD: 0,
            CoordKind.BI: self.m,
            CoordKind.SINGLE: self.m + self.n_prime,
        }[kind]
        return range(start, start + self.count(kind))

    def bi_mask(self) -> "np.ndarray":
        """Boolean mask of the components that hold doubled Bi bits."""
        mask = np.zeros(self.width, dtype=bool)
        start, stop = self.block(CoordKind.BI)
        mask[start:stop] = True
        return mask

    def grow(self, kind: CoordKind) -> "Shape":
        """The shape with one more coordinate of the given kind."""
        return Shape(
            m=self.m + (kind == CoordKind.QUAD),
            n_prime=self.n_prime + (kind == CoordKind.BI),
            n_double_prime=self.n_double_prime + (kind == CoordKind.SINGLE),
        )

    def shrink(self, kind: CoordKind) -> "Shape":
        """The shape with one coordinate of the given kind less."""
        if self.count(kind) == 0:
            raise ValueError(f"{self} has no {kind} coordinate to remove")
        return Shape(
            m=self.m - (kind == CoordKind.QUAD),
            n_prime=self.n_prime - (kind == CoordKind.BI),
            n_double_prime=self.n_double_prime - (kind == CoordKind.SINGLE),
        )

    def __str__(self) -> str:
        """Doob graph name `D(m,n'+n'')`."""
        return f"D({self.m},{self.n_prime}+{self.n_double_prime})"
