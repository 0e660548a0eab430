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

from typing import Any, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from doobcodes.alphabet.gf4 import GF4Vector, as_gf4
from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.symbols import symbol_table
from doobcodes.alphabet.vectors import MixedVector, rows_of_symbols
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.codes.echelon import echelon
from doobcodes.exceptions import ShapeMismatchError
from doobcodes.logger import get_logger

logger = get_logger(__name__)


class AdditiveCode:
    """A subgroup of the ambient module of a shape.

    The code is stored in the reduced echelon form of `codes.echelon`, so two
    codes are equal exactly when their stored generators are equal. Codes
    are immutable; the codeword array is computed once and cached.

    Attributes:
        shape: The ambient shape.
        gens4: uint8 array `(delta, width)` of the order-4 generators.
        gens2: uint8 array `(gamma, width)` of the order-2 generators.
    """

    __slots__ = ("shape", "gens4", "gens2", "_codewords", "_key")

    def __init__(self, shape: Shape, rows: Any = ()) -> None:
        """Builds the code spanned by rows of stored components.

        Args:
            shape: The ambient shape.
            rows: Array-like `(N, width)` of components, or a sequence of
                `MixedVector`s of this shape.

        Raises:
            ShapeMismatchError: if a row has the wrong width or an odd Bi
                component.
        """
        matrix = self._rows_to_matrix(shape, rows)
        gens4, gens2 = echelon(matrix, shape.width)
        gens4.setflags(write=False)
        gens2.setflags(write=False)
        self.shape = shape
        self.gens4 = gens4
        self.gens2 = gens2
        self._codewords: Optional["np.ndarray"] = None
        self._key = (
            shape.m,
            shape.n_prime,
            shape.n_double_prime,
            gens4.shape[0],
            gens2.shape[0],
            gens4.tobytes() + gens2.tobytes(),
        )

    @staticmethod
    def _rows_to_matrix(shape: Shape, rows: Any) -> "np.ndarray":
        if isinstance(rows, np.ndarray):
            matrix = rows.astype(np.int64)
        else:
            items = list(rows)
            if items and isinstance(items[0], MixedVector):
                for vector in items:
                    if vector.shape != shape:
                        raise ShapeMismatchError(
                            f"Generator of {vector.shape} given for a code in "
                            f"{shape}."
                        )
                items = [vector.components for vector in items]
            matrix = np.array(items, dtype=np.int64)
        if matrix.size == 0:
            return np.zeros((0, shape.width), dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[1] != shape.width:
            raise ShapeMismatchError(
                f"Generator rows of {shape} need {shape.width} components, "
                f"got an array of shape {matrix.shape}."
            )
        matrix %= 4
        if (matrix[:, shape.bi_mask()] % 2).any():
            raise ShapeMismatchError("Bi components must be 0 or 2.")
        return matrix

    @classmethod
    def trivial(cls, shape: Shape) -> "AdditiveCode":
        """The zero code `{0}`."""
        return cls(shape)

    @classmethod
    def full(cls, shape: Shape) -> "AdditiveCode":
        """The whole ambient module."""
        rows = np.zeros((shape.width, shape.width), dtype=np.int64)
        for column in range(shape.width):
            rows[column, column] = 1
        rows[shape.bi_mask()] *= 2
        return cls(shape, rows)

    @classmethod
    def from_digits(
        cls, shape: Shape, digit_rows: Sequence[Sequence[int]]
    ) -> "AdditiveCode":
        """The code spanned by rows of per-coordinate digits."""
        if not len(digit_rows):
            return cls(shape)
        return cls(shape, rows_of_symbols(shape, np.array(digit_rows)))

    @classmethod
    def from_gf4(cls, rows: Iterable[GF4Vector]) -> "AdditiveCode":
        """The additive (Z2-)span of GF(4) rows, in the shape `GF(4)^n`.

        Raises:
            ShapeMismatchError: if the rows differ in length or there are none.
        """
        vectors = [np.asarray(as_gf4(row), dtype=np.int64) for row in rows]
        if not vectors:
            raise ShapeMismatchError("At least one row is needed to fix n.")
        lengths = {vector.shape[0] for vector in vectors}
        if len(lengths) != 1:
            raise ShapeMismatchError(
                f"GF(4) rows of lengths {sorted(lengths)}."
            )
        shape = Shape.gf4(lengths.pop())
        return cls.from_digits(shape, vectors)

    @property
    def group_type(self) -> Tuple[int, int]:
        """`(delta, gamma)` of the type `Z4^delta Z2^gamma`."""
        return self.gens4.shape[0], self.gens2.shape[0]

    @property
    def dimension(self) -> int:
        """Binary dimension `log2 |C| = 2 delta + gamma`."""
        delta, gamma = self.group_type
        return 2 * delta + gamma

    @property
    def size(self) -> int:
        """Number of codewords."""
        return 2**self.dimension

    def generators(self) -> List[MixedVector]:
        """Stored generators, order-4 rows first."""
        return [
            MixedVector(self.shape, row)
            for row in np.concatenate([self.gens4, self.gens2])
        ]

    def generator_rows(self) -> "np.ndarray":
        """Stored generators as one int64 array, order-4 rows first."""
        return np.concatenate([self.gens4, self.gens2]).astype(np.int64)

    def codewords(self, budgets: Budgets = DEFAULT_BUDGETS) -> "np.ndarray":
        """All codewords as a read-only uint8 array `(|C|, width)`.

        Codewords are ordered by their coefficient vectors, the first
        generator varying slowest; the zero word comes first.

        Raises:
            BudgetExceededError: if `|C|` exceeds the span budget.
        """
        budgets.check("span", self.size)
        if self._codewords is None:
            words = np.zeros((1, self.shape.width), dtype=np.uint8)
            for row, order in [(g, 4) for g in self.gens4] + [
                (g, 2) for g in self.gens2
            ]:
                multiples = (np.arange(order)[:, None] * row) % 4
                words = (words[:, None, :] + multiples[None, :, :]) % 4
                words = words.reshape(
                    words.shape[0] * order, self.shape.width
                ).astype(np.uint8)
            words.setflags(write=False)
            self._codewords = words
        return self._codewords

    def reduce(self, rows: "np.ndarray") -> "np.ndarray":
        """Remainders of vectors modulo the code; zero exactly on codewords.

        Args:
            rows: Array `(N, width)` of components.
        """
        work = np.array(rows, dtype=np.int64) % 4
        if work.ndim == 1:
            work = work[None, :]
        for row in self.gens4:
            pivot = int(np.flatnonzero(row % 2)[0])
            work = (work - np.outer(work[:, pivot], row)) % 4
        for row in self.gens2:
            pivot = int(np.flatnonzero(row)[0])
            work = (work - np.outer(work[:, pivot] // 2, row)) % 4
        return work

    def contains_rows(self, rows: "np.ndarray") -> "np.ndarray":
        """Vectorized membership test; boolean array of length `N`."""
        return ~self.reduce(rows).any(axis=1)

    def __contains__(self, vector: object) -> bool:
        if not isinstance(vector, MixedVector) or vector.shape != self.shape:
            return False
        return bool(self.contains_rows(vector.components[None, :])[0])

    def with_rows(self, rows: Any) -> "AdditiveCode":
        """The code spanned by this code and further rows."""
        extra = self._rows_to_matrix(self.shape, rows)
        return AdditiveCode(
            self.shape, np.concatenate([self.generator_rows(), extra])
        )

    def is_subcode_of(self, other: "AdditiveCode") -> bool:
        """Whether every generator lies in `other`."""
        if other.shape != self.shape:
            return False
        return bool(other.contains_rows(self.generator_rows()).all())

    def to_bytes(self) -> bytes:
        """Serialization of the stored form; equal iff the codes are equal."""
        m, n1, n2, delta, gamma, body = self._key
        return bytes([m, n1, n2, delta, gamma]) + body

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AdditiveCode) and other._key == self._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        delta, gamma = self.group_type
        return (
            f"AdditiveCode({self.shape}, size={self.size}, "
            f"type=Z4^{delta} Z2^{gamma})"
        )


def span(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> FrozenSet[MixedVector]:
    """All codewords as a set of vectors.

    Raises:
        BudgetExceededError: if `|C|` exceeds the span budget.
    """
    return frozenset(
        MixedVector(code.shape, row) for row in code.codewords(budgets)
    )


def group_type(code: AdditiveCode) -> Tuple[int, int]:
    """`(delta, gamma)` with `|C| = 4^delta 2^gamma`."""
    return code.group_type


def unit_rows(shape: Shape) -> "np.ndarray":
    """All weight-1 vectors of a shape, coordinate by coordinate."""
    rows: List["np.ndarray"] = []
    blocks = zip(shape.kinds, shape.offsets)
    for coordinate, (kind, offset) in enumerate(blocks):
        table = symbol_table(kind)
        for digit in table.unit_digits:
            row = np.zeros(shape.width, dtype=np.uint8)
            row[offset : offset + kind.components] = table.components[digit]
            rows.append(row)
    if not rows:
        return np.zeros((0, shape.width), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)


__all__ = ["AdditiveCode", "group_type", "span", "unit_rows"]
