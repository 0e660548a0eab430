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

import numpy as np
import pytest

from doobcodes.alphabet.shape import Shape
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.operations import (
    append_zero_coordinate,
    binary_weights,
    bits_to_2z4,
    concatenate_to_binary,
    cyclic_shift_rows,
    even_subcode,
    f4_span,
    is_cyclic,
    is_f4_linear,
    omega_multiple,
    puncture,
    shorten,
)
from doobcodes.codes.weights import (
    codeword_weights,
    min_distance,
    weight_distribution,
)
from doobcodes.enums import CoordKind, Metric
from doobcodes.exceptions import (
    IncompatibleFormError,
    PreconditionError,
    ShapeMismatchError,
)
from tests.conftest import RandomCodeFactory


def test_puncture_and_shorten_in_gf4() -> None:
    """Both drop a coordinate; shortening keeps only words zero there."""
    code = AdditiveCode.from_gf4([[1, 1, 0], [0, 2, 2]])
    punctured = puncture(code, 0)
    assert punctured.shape == Shape.gf4(2)
    assert punctured == AdditiveCode.from_gf4([[1, 0], [2, 2]])
    shortened = shorten(code, 0)
    assert shortened == AdditiveCode.from_gf4([[2, 2]])


@pytest.mark.parametrize(
    "shape", [Shape.of(1, 1, 1), Shape.of(2, 0, 2), Shape.of(1, 3, 0)], ids=str
)
def test_puncture_and_shorten_sizes(
    shape: Shape, random_code: RandomCodeFactory
) -> None:
    """Puncturing projects every codeword; shortening keeps those that
    vanish at the coordinate."""
    for generators in (1, 2, 3):
        code = random_code(shape, generators)
        words = code.codewords()
        for coordinate in range(shape.length):
            kind = shape.kinds[coordinate]
            offset = shape.offsets[coordinate]
            columns = np.arange(offset, offset + kind.components)
            projected = np.delete(words, columns, axis=1)
            vanishing = projected[~words[:, columns].any(axis=1)]
            punctured = puncture(code, coordinate)
            shortened = shorten(code, coordinate)
            assert punctured.shape == shape.shrink(kind)
            assert punctured.size == len(np.unique(projected, axis=0))
            assert punctured.contains_rows(projected).all()
            assert shortened.size == len(vanishing)
            assert shortened.contains_rows(vanishing).all()



def test_puncture_rejects_missing_coordinates() -> None:
    """Coordinates are counted from zero across the blocks."""
    code = AdditiveCode.trivial(Shape.of(1, 1, 0))
    for coordinate in (-1, 2):
        with pytest.raises(PreconditionError):
            puncture(code, coordinate)
        with pytest.raises(PreconditionError):
            shorten(code, coordinate)


def test_append_zero_keeps_weights(
    table_codes: Dict[str, AdditiveCode],
) -> None:
    """A zero Quad coordinate leaves sizes and weights unchanged."""
    code = table_codes["B3"]
    grown = append_zero_coordinate(code, CoordKind.QUAD)
    assert grown.shape == Shape.of(5, 1, 0)
    assert grown.size == code.size
    assert grown.group_type == code.group_type
    old = weight_distribution(code)
    new = weight_distribution(grown)
    assert new.as_dict() == old.as_dict()
    assert not grown.generator_rows()[:, :2].any()


def test_append_zero_of_each_kind() -> None:
    """The new coordinate is first in its block."""
    code = AdditiveCode.from_digits(Shape.of(1, 1, 1), [[3, 2, 1, 1]])
    grown = append_zero_coordinate(code, CoordKind.SINGLE)
    assert grown.shape == Shape.of(1, 1, 2)
    assert grown.generator_rows()[:, 4].tolist() == [0]
    grown = append_zero_coordinate(code, CoordKind.BI)
    assert grown.shape == Shape.of(1, 2, 1)
    assert grown.generator_rows()[:, 2:4].tolist() == [[0, 0]]


def test_omega_multiplication() -> None:
    """`1 -> w -> w^2 -> 1` on every coordinate."""
    code = AdditiveCode.from_gf4([[1, 2, 3, 0]])
    tripled = code.generator_rows()
    for _ in range(3):
        tripled = omega_multiple(tripled)
    assert (tripled == code.generator_rows()).all()
    once = AdditiveCode(code.shape, omega_multiple(code.generator_rows()))
    assert once == AdditiveCode.from_gf4([[2, 3, 1, 0]])


def test_f4_linearity(random_code: RandomCodeFactory) -> None:
    """`{0, 1}` is not F4-linear; its F4-span is the field."""
    code = AdditiveCode.from_gf4([[1]])
    assert not is_f4_linear(code)
    assert f4_span(code) == AdditiveCode.full(Shape.gf4(1))
    for n in range(1, 5):
        spanned = f4_span(random_code(Shape.gf4(n), 2))
        assert is_f4_linear(spanned)
        assert spanned.group_type[0] == 0
        assert spanned.dimension % 2 == 0
    with pytest.raises(IncompatibleFormError):
        is_f4_linear(AdditiveCode.trivial(Shape.of(1, 0, 0)))


def test_cyclic_codes(cyclic7: AdditiveCode) -> None:
    """The stored length-7 code is cyclic; repetition codes are too."""
    assert is_cyclic(cyclic7)
    assert cyclic7.size == 32
    assert is_cyclic(AdditiveCode.from_gf4([[1, 1, 1]]))
    assert not is_cyclic(AdditiveCode.from_gf4([[1, 0, 0]]))
    rows = np.array([[0, 1, 2, 3]])
    shifted = cyclic_shift_rows(Shape.of(0, 0, 4), rows)
    assert shifted.tolist() == [[3, 0, 1, 2]]


def test_cyclic_needs_a_single_kind() -> None:
    """Shifts are undefined across blocks."""
    with pytest.raises(ShapeMismatchError):
        is_cyclic(AdditiveCode.trivial(Shape.of(1, 1, 0)))


def test_even_subcode() -> None:
    """The even words of `<11, 10>` are `<11>`; those of `<11, w0>`
    are not closed."""
    code = AdditiveCode.from_gf4([[1, 1], [1, 0]])
    assert even_subcode(code) == AdditiveCode.from_gf4([[1, 1]])
    with pytest.raises(PreconditionError):
        even_subcode(AdditiveCode.from_gf4([[1, 1], [2, 0]]))


def test_binary_concatenation_doubles_weights(
    random_code: RandomCodeFactory,
) -> None:
    """The image has the same size and twice the Hamming weights."""
    for n in range(1, 5):
        code = random_code(Shape.gf4(n), 3)
        image = concatenate_to_binary(code)
        assert image.shape == (code.dimension, 3 * n)
        weights = np.sort(binary_weights(image))
        expected = np.sort(2 * codeword_weights(code, Metric.HAMMING))
        assert (weights == expected).all()


def test_binary_image_of_the_trivial_code() -> None:
    """No generators, no rows."""
    image = concatenate_to_binary(AdditiveCode.trivial(Shape.gf4(2)))
    assert image.shape == (0, 6)
    assert binary_weights(image).tolist() == [0]


def test_hexacode_embeds_into_the_doob_scheme(
    hexacode: AdditiveCode,
) -> None:
    """The image in `D(6,0+0)` is elementary abelian with distance 8."""
    assert weight_distribution(hexacode, Metric.HAMMING).nonzero_weights == (
        4,
        6,
    )
    image = bits_to_2z4(hexacode)
    assert image.shape == Shape.of(6, 0, 0)
    assert image.group_type == (0, 6)
    assert min_distance(image) == 8
    with pytest.raises(IncompatibleFormError):
        bits_to_2z4(image)


def test_shorten_down_to_length_zero() -> None:
    """Shortening the whole of GF(4)^1 leaves the zero code of length 0."""
    shortened = shorten(AdditiveCode.full(Shape.gf4(1)), 0)
    assert shortened == AdditiveCode.trivial(Shape.gf4(0))
    assert shortened.size == 1
    assert puncture(AdditiveCode.full(Shape.gf4(1)), 0).size == 1


def test_binary_image_of_the_trivial_hexacode_ambient() -> None:
    """The zero code of GF(4)^6 has an empty binary generator matrix."""
    image = concatenate_to_binary(AdditiveCode.trivial(Shape.gf4(6)))
    assert image.shape == (0, 18)
