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

from typing import Any, Iterable, Sequence, Tuple

import numpy as np

from doobcodes.alphabet.gf4 import GF4, GF4Vector, as_gf4
from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.symbols import symbol_table
from doobcodes.enums import CoordKind, Metric
from doobcodes.exceptions import IncompatibleFormError, ShapeMismatchError

QUAD = symbol_table(CoordKind.QUAD)
BI = symbol_table(CoordKind.BI)
SINGLE = symbol_table(CoordKind.SINGLE)


def symbols_of_rows(shape: Shape, rows: "np.ndarray") -> "np.ndarray":
    """Per-coordinate digits of a stack of vectors.

    Args:
        shape: Ambient shape.
        rows: Array `(N, width)` of components.

    Returns:
        Array `(N, length)` of digits, coordinates in shape order.
    """
    rows = np.asarray(rows)
    n = rows.shape[0]
    parts = []
    for kind, table in ((CoordKind.QUAD, QUAD), (CoordKind.BI, BI)):
        start, stop = shape.block(kind)
        block = rows[:, start:stop].reshape(n, (stop - start) // 2, 2)
        parts.append(table.digits(block))
    start, stop = shape.block(CoordKind.SINGLE)
    parts.append(rows[:, start:stop].astype(np.int64))
    return np.concatenate(parts, axis=1)


def rows_of_symbols(shape: Shape, digits: "np.ndarray") -> "np.ndarray":
    """Inverse of `symbols_of_rows`."""
    digits = np.asarray(digits, dtype=np.int64)
    n = digits.shape[0]
    rows = np.zeros((n, shape.width), dtype=np.uint8)
    quad = shape.coordinates(CoordKind.QUAD)
    bi = shape.coordinates(CoordKind.BI)
    single = shape.coordinates(CoordKind.SINGLE)
    start, stop = shape.block(CoordKind.QUAD)
    rows[:, start:stop] = QUAD.components[
        digits[:, quad.start : quad.stop]
    ].reshape(n, stop - start)
    start, stop = shape.block(CoordKind.BI)
    rows[:, start:stop] = BI.components[digits[:, bi.start : bi.stop]].reshape(
        n, stop - start
    )
    start, stop = shape.block(CoordKind.SINGLE)
    rows[:, start:stop] = digits[:, single.start : single.stop]
    return rows


def weights_of_rows(
    shape: Shape, rows: "np.ndarray", metric: Metric = Metric.DOOB
) -> "np.ndarray":
    """Weights of a stack of vectors.

    The Doob weight of a Quad symbol is its distance from 0 in the
    Shrikhande graph (1 on 01, 03, 10, 30, 11, 33 and 2 on the other nonzero
    symbols); Bi and Single symbols weigh 1 when nonzero. The Hamming weight
    counts nonzero coordinates.
    """
    rows = np.asarray(rows)
    n = rows.shape[0]
    start, stop = shape.block(CoordKind.QUAD)
    quad = QUAD.digits(rows[:, start:stop].reshape(n, shape.m, 2))
    start, stop = shape.block(CoordKind.SINGLE)
    rest = rows[:, 2 * shape.m : stop]
    bi_pairs = rows[:, 2 * shape.m : start].reshape(n, shape.n_prime, 2)
    bi_nonzero = bi_pairs.any(axis=2).sum(axis=1)
    single_nonzero = (rest[:, 2 * shape.n_prime :] != 0).sum(axis=1)
    if metric == Metric.DOOB:
        quad_weight = QUAD.weight[quad].sum(axis=1)
    else:
        quad_weight = (quad != 0).sum(axis=1)
    return (quad_weight + bi_nonzero + single_nonzero).astype(np.int64)


def doob_ip_rows(
    shape: Shape, x_rows: "np.ndarray", y_rows: "np.ndarray"
) -> "np.ndarray":
    """Doob inner products of broadcast stacks of vectors.

    `<x, y> = sum_Quad (x1 y1 - x2 y2) + 2 sum_Bi bits + sum_Single x y`
    reduced mod 4. With Bi bits stored doubled, their term is `x y / 2`.
    """
    products = np.asarray(x_rows, dtype=np.int64) * np.asarray(
        y_rows, dtype=np.int64
    )
    coefficients, bi_mask = _form_coefficients(shape)
    total = (products * coefficients).sum(axis=-1)
    total += (products[..., bi_mask] // 2).sum(axis=-1)
    return total % 4


def _form_coefficients(shape: Shape) -> Tuple["np.ndarray", "np.ndarray"]:
    coefficients = np.ones(shape.width, dtype=np.int64)
    start, stop = shape.block(CoordKind.QUAD)
    coefficients[start + 1 : stop : 2] = -1
    bi_mask = shape.bi_mask()
    coefficients[bi_mask] = 0
    return coefficients, bi_mask


class MixedVector:
    """A word of the mixed module `(Z4^2)^m x (Z2^2)^n' x Z4^n''`.

    Immutable; supports `+`, `-`, negation and integer scalar multiples.
    """

    __slots__ = ("shape", "components")

    def __init__(self, shape: Shape, components: Iterable[int]) -> None:
        """Builds a vector from stored components.

        Args:
            shape: Ambient shape.
            components: `shape.width` values in Z4; Bi components must be
                doubled bits (0 or 2).

        Raises:
            ShapeMismatchError: on a wrong number of components or an odd Bi
                component.
        """
        array = np.array(list(components), dtype=np.int64) % 4
        if array.shape != (shape.width,):
            raise ShapeMismatchError(
                f"{shape} vectors have {shape.width} components, "
                f"got {array.shape[0] if array.ndim else 0}."
            )
        if (array[shape.bi_mask()] % 2).any():
            raise ShapeMismatchError("Bi components must be 0 or 2.")
        frozen = array.astype(np.uint8)
        frozen.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "components", frozen)

    def __setattr__(self, key: str, value: Any) -> None:
        raise AttributeError("MixedVector is immutable")

    @classmethod
    def zero(cls, shape: Shape) -> "MixedVector":
        """The zero vector."""
        return cls(shape, [0] * shape.width)

    @classmethod
    def from_symbols(
        cls,
        shape: Shape,
        quad: Sequence[Tuple[int, int]] = (),
        bi: Sequence[Tuple[int, int]] = (),
        single: Sequence[int] = (),
    ) -> "MixedVector":
        """Builds a vector from per-block symbols.

        Args:
            shape: Ambient shape.
            quad: `m` pairs in Z4 x Z4.
            bi: `n'` pairs of bits.
            single: `n''` values in Z4.

        Raises:
            ShapeMismatchError: if a block has the wrong length.
            ValueError: on an out-of-range symbol.
        """
        if (len(quad), len(bi), len(single)) != (
            shape.m,
            shape.n_prime,
            shape.n_double_prime,
        ):
            raise ShapeMismatchError(
                f"Symbol counts ({len(quad)}, {len(bi)}, {len(single)}) do "
                f"not match {shape}."
            )
        components = []
        for a, b in quad:
            if not (0 <= a < 4 and 0 <= b < 4):
                raise ValueError(f"Quad symbol {(a, b)} out of range.")
            components += [a, b]
        for h, l in bi:
            if h not in (0, 1) or l not in (0, 1):
                raise ValueError(f"Bi symbol {(h, l)} out of range.")
            components += [2 * h, 2 * l]
        for x in single:
            if not 0 <= x < 4:
                raise ValueError(f"Single symbol {x} out of range.")
            components.append(x)
        return cls(shape, components)

    @classmethod
    def from_gf4(cls, symbols: GF4Vector) -> "MixedVector":
        """Embeds a GF(4) vector into the Bi-only shape of its length."""
        values = np.asarray(as_gf4(symbols), dtype=np.int64)
        shape = Shape.gf4(values.shape[0])
        return cls(shape, BI.components[values].reshape(-1))

    @classmethod
    def from_digits(cls, shape: Shape, digits: Sequence[int]) -> "MixedVector":
        """Builds a vector from per-coordinate digits."""
        row = rows_of_symbols(shape, np.array([list(digits)], dtype=np.int64))
        return cls(shape, row[0])

    @property
    def quad(self) -> Tuple[Tuple[int, int], ...]:
        """Quad symbols as pairs."""
        c = self.components
        return tuple(
            (int(c[2 * i]), int(c[2 * i + 1])) for i in range(self.shape.m)
        )

    @property
    def bi(self) -> Tuple[Tuple[int, int], ...]:
        """Bi symbols as pairs of bits."""
        start, _ = self.shape.block(CoordKind.BI)
        c = self.components
        return tuple(
            (int(c[start + 2 * j]) // 2, int(c[start + 2 * j + 1]) // 2)
            for j in range(self.shape.n_prime)
        )

    @property
    def single(self) -> Tuple[int, ...]:
        """Single symbols."""
        start, stop = self.shape.block(CoordKind.SINGLE)
        return tuple(int(x) for x in self.components[start:stop])

    def symbols(self) -> "np.ndarray":
        """Per-coordinate digits."""
        return symbols_of_rows(self.shape, self.components[None, :])[0]

    def to_gf4(self) -> "GF4":
        """The GF(4) vector of a Bi-only vector.

        Raises:
            IncompatibleFormError: if the shape has Quad or Single
                coordinates.
        """
        if not self.shape.is_gf4:
            raise IncompatibleFormError(f"{self.shape} is not a GF(4) shape.")
        return GF4(self.symbols())

    def _check(self, other: "MixedVector") -> None:
        if not isinstance(other, MixedVector) or other.shape != self.shape:
            raise ShapeMismatchError(
                f"Cannot combine vectors of {self.shape} and "
                f"{getattr(other, 'shape', type(other).__name__)}."
            )

    def __add__(self, other: "MixedVector") -> "MixedVector":
        self._check(other)
        return MixedVector(
            self.shape,
            self.components.astype(np.int64) + other.components,
        )

    def __neg__(self) -> "MixedVector":
        return MixedVector(self.shape, -self.components.astype(np.int64))

    def __sub__(self, other: "MixedVector") -> "MixedVector":
        return self + (-other)

    def __mul__(self, scalar: int) -> "MixedVector":
        return MixedVector(
            self.shape, self.components.astype(np.int64) * int(scalar)
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MixedVector)
            and other.shape == self.shape
            and bool(np.array_equal(other.components, self.components))
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.components.tobytes()))

    def __repr__(self) -> str:
        parts = []
        if self.shape.m:
            parts.append(" ".join(f"{a}{b}" for a, b in self.quad))
        if self.shape.n_prime:
            parts.append(" ".join(f"{h}{l}" for h, l in self.bi))
        if self.shape.n_double_prime:
            parts.append(" ".join(str(x) for x in self.single))
        return f"MixedVector({self.shape}: {' | '.join(parts)})"


def doob_weight(v: MixedVector) -> int:
    """Doob weight: the graph distance from 0 in `D(m, n'+n'')`."""
    return int(weights_of_rows(v.shape, v.components[None, :])[0])


def doob_ip(x: MixedVector, y: MixedVector) -> int:
    """Doob inner product in Z4.

    Raises:
        ShapeMismatchError: if the vectors live in different shapes.
    """
    x._check(y)
    return int(doob_ip_rows(x.shape, x.components, y.components))


def doob_distance(x: MixedVector, y: MixedVector) -> int:
    """Doob distance `wt(y - x)`.

    Raises:
        ShapeMismatchError: if the vectors live in different shapes.
    """
    return doob_weight(y - x)
