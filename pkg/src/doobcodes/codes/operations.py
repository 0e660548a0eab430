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

from typing import Tuple

import galois
import numpy as np

from doobcodes.alphabet.gf4 import GF2
from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.vectors import symbols_of_rows
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.echelon import z4_left_kernel
from doobcodes.codes.weights import codeword_weights
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import CoordKind, Metric
from doobcodes.exceptions import (
    IncompatibleFormError,
    PreconditionError,
    ShapeMismatchError,
)

# 0, 1, omega, omega^2 as binary triples; additive, each of weight 0 or 2
BINARY_TRIPLES = np.array(
    [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=np.int64
)


def _require_gf4(code: AdditiveCode, operation: str) -> None:
    if not code.shape.is_gf4:
        raise IncompatibleFormError(
            f"`{operation}` needs a GF(4)^n code, got one in {code.shape}."
        )


def _columns_of(shape: Shape, coordinate: int) -> Tuple[CoordKind, slice]:
    if not 0 <= coordinate < shape.length:
        raise PreconditionError(
            f"Coordinate {coordinate} does not exist in {shape}."
        )
    kind = shape.kinds[coordinate]
    offset = shape.offsets[coordinate]
    return kind, slice(offset, offset + kind.components)


def puncture(code: AdditiveCode, coordinate: int) -> AdditiveCode:
    """Deletes a coordinate from every codeword.

    Raises:
        PreconditionError: if the coordinate does not exist.
    """
    kind, columns = _columns_of(code.shape, coordinate)
    rows = np.delete(
        code.generator_rows(), np.arange(columns.start, columns.stop), axis=1
    )
    return AdditiveCode(code.shape.shrink(kind), rows)


def shorten(code: AdditiveCode, coordinate: int) -> AdditiveCode:
    """Keeps the codewords vanishing at a coordinate, then deletes it.

    The subcode is the image of the left kernel of the generator columns of
    the coordinate, so no codeword is enumerated.

    Raises:
        PreconditionError: if the coordinate does not exist.
    """
    kind, columns = _columns_of(code.shape, coordinate)
    gens = code.generator_rows()
    shape = code.shape.shrink(kind)
    if gens.shape[0] == 0:
        return AdditiveCode.trivial(shape)
    kernel = z4_left_kernel(gens[:, columns])
    rows = (kernel @ gens) % 4
    rows = np.delete(rows, np.arange(columns.start, columns.stop), axis=1)
    return AdditiveCode(shape, rows)


def append_zero_coordinate(code: AdditiveCode, kind: CoordKind) -> AdditiveCode:
    """Adds a coordinate that is zero in every codeword.

    The new coordinate becomes the first of its block, so a new Quad
    coordinate puts `00` at the beginning of each codeword.
    """
    shape = code.shape.grow(kind)
    start, _ = code.shape.block(kind)
    rows = np.insert(
        code.generator_rows(), [start] * kind.components, 0, axis=1
    )
    return AdditiveCode(shape, rows)


def omega_multiple(rows: "np.ndarray") -> "np.ndarray":
    """`omega * v` for stored GF(4)^n rows: `(h, l) -> (h + l, h)`."""
    rows = np.asarray(rows, dtype=np.int64)
    high, low = rows[..., 0::2] // 2, rows[..., 1::2] // 2
    result = np.empty_like(rows)
    result[..., 0::2] = 2 * (high ^ low)
    result[..., 1::2] = 2 * high
    return result


def is_f4_linear(code: AdditiveCode) -> bool:
    """Whether the code is closed under multiplication by omega.

    Raises:
        IncompatibleFormError: unless the code lives in `GF(4)^n`.
    """
    _require_gf4(code, "is_f4_linear")
    return bool(code.contains_rows(omega_multiple(code.generator_rows())).all())


def f4_span(code: AdditiveCode) -> AdditiveCode:
    """Smallest F4-linear code containing the code.

    Raises:
        IncompatibleFormError: unless the code lives in `GF(4)^n`.
    """
    _require_gf4(code, "f4_span")
    return code.with_rows(omega_multiple(code.generator_rows()))


def _single_kind(shape: Shape) -> CoordKind:
    kinds = set(shape.kinds)
    if len(kinds) != 1:
        raise ShapeMismatchError(
            f"Cyclic shifts need a single coordinate kind, {shape} has "
            f"{len(kinds) or 'no'} kinds."
        )
    return kinds.pop()


def cyclic_shift_rows(
    shape: Shape, rows: "np.ndarray", steps: int = 1
) -> "np.ndarray":
    """Rotates the coordinates of single-kind rows `steps` places right.

    Raises:
        ShapeMismatchError: if the shape mixes coordinate kinds.
    """
    kind = _single_kind(shape)
    return np.roll(np.asarray(rows), steps * kind.components, axis=-1)


def is_cyclic(code: AdditiveCode) -> bool:
    """Whether the code is invariant under the cyclic shift.

    Raises:
        ShapeMismatchError: if the shape mixes coordinate kinds.
    """
    shifted = cyclic_shift_rows(code.shape, code.generator_rows())
    return bool(code.contains_rows(shifted).all())


def even_subcode(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> AdditiveCode:
    """Subcode of the even-weight codewords.

    Raises:
        IncompatibleFormError: unless the code lives in `GF(4)^n`.
        PreconditionError: if the even codewords are not closed under
            addition, which needs a pair of even words that are not
            trace-Hermitian orthogonal.
    """
    _require_gf4(code, "even_subcode")
    words = code.codewords(budgets)
    even = words[codeword_weights(code, Metric.HAMMING, budgets) % 2 == 0]
    result = AdditiveCode(code.shape, even)
    if result.size != even.shape[0]:
        raise PreconditionError(
            f"The {even.shape[0]} even codewords of {code!r} do not form a "
            f"subgroup."
        )
    return result


def concatenate_to_binary(code: AdditiveCode) -> "galois.FieldArray":
    """Binary image under `0, 1, w, w^2 -> 000, 011, 101, 110`.

    The substitution is additive and doubles weights.

    Returns:
        Generator matrix of the binary image, in reduced row echelon form,
        `k x 3n` over GF(2).

    Raises:
        IncompatibleFormError: unless the code lives in `GF(4)^n`.
    """
    _require_gf4(code, "concatenate_to_binary")
    n = code.shape.n_prime
    symbols = symbols_of_rows(code.shape, code.gens2)
    image = BINARY_TRIPLES[symbols].reshape(-1, 3 * n)
    if image.shape[0] == 0:
        return GF2(np.zeros((0, 3 * n), dtype=np.int64))
    reduced = GF2(image).row_reduce()
    return reduced[np.flatnonzero(np.asarray(reduced).any(axis=1))]


def binary_weights(matrix: "galois.FieldArray") -> "np.ndarray":
    """Hamming weights of all codewords spanned by a GF(2) matrix."""
    rows = np.asarray(matrix, dtype=np.uint8)
    words = np.zeros((1, rows.shape[1]), dtype=np.uint8)
    for row in rows:
        words = np.concatenate([words, words ^ row])
    return words.sum(axis=1)


def bits_to_2z4(code: AdditiveCode) -> AdditiveCode:
    """Embeds a GF(4)^n code into `D(n, 0+0)` by `(h, l) -> (2h, 2l)`.

    The image has type `Z2^k` and doubles every Hamming weight.

    Raises:
        IncompatibleFormError: unless the code lives in `GF(4)^n`.
    """
    _require_gf4(code, "bits_to_2z4")
    return AdditiveCode(Shape.of(code.shape.n_prime), code.generator_rows())
