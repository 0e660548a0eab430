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

import pytest

from doobcodes.alphabet.shape import Shape
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.duality import (
    doob_dual,
    dual,
    gram_matrix,
    hermitian_dual,
    is_self_dual,
    is_self_orthogonal,
    trace_hermitian_dual,
)
from doobcodes.codes.operations import even_subcode, f4_span
from doobcodes.codes.weights import macwilliams, weight_distribution
from doobcodes.enums import InnerProductForm, Metric
from doobcodes.exceptions import IncompatibleFormError, PreconditionError
from tests.conftest import RandomCodeFactory

TH = InnerProductForm.TRACE_HERMITIAN
DOOB_SHAPES = [
    Shape.of(1, 0, 0),
    Shape.of(1, 1, 1),
    Shape.of(2, 0, 1),
    Shape.of(1, 2, 2),
    Shape.of(3, 0, 1),
    Shape.of(0, 2, 3),
]


def test_trace_hermitian_dual_of_the_prime_field() -> None:
    """`{0, 1}` in `GF(4)^1` is its own trace-Hermitian dual."""
    code = AdditiveCode.from_gf4([[1]])
    assert trace_hermitian_dual(code) == code
    assert is_self_dual(code, TH)


def test_duals_of_trivial_and_full_codes() -> None:
    """The dual of the ambient is `{0}` and vice versa."""
    for shape in (Shape.of(1, 1, 1), Shape.gf4(2)):
        full = AdditiveCode.full(shape)
        assert doob_dual(full) == AdditiveCode.trivial(shape)
        assert doob_dual(AdditiveCode.trivial(shape)) == full
    gf4 = Shape.gf4(2)
    assert trace_hermitian_dual(AdditiveCode.full(gf4)).size == 1
    assert hermitian_dual(AdditiveCode.trivial(gf4)).size == 16


def test_dual_of_b1_has_size_4096(table_codes: Dict[str, AdditiveCode]) -> None:
    """`|C| |C^perp| = 4^9` in `D(4,1+0)`."""
    assert dual(table_codes["B1"]).size == 4096


@pytest.mark.parametrize("shape", DOOB_SHAPES, ids=str)
def test_doob_duality_laws(
    shape: Shape, random_code: RandomCodeFactory
) -> None:
    """Size identity, involution and orthogonality of the Doob dual."""
    for generators in range(4):
        code = random_code(shape, generators)
        other = doob_dual(code)
        assert code.size * other.size == shape.ambient_order
        assert doob_dual(other) == code
        assert is_self_orthogonal(other) == other.is_subcode_of(code)


@pytest.mark.parametrize("n", range(1, 6))
def test_trace_hermitian_duality_laws(
    n: int, random_code: RandomCodeFactory
) -> None:
    """Size identity and involution of the trace-Hermitian dual."""
    for generators in range(2 * n + 1):
        code = random_code(Shape.gf4(n), generators)
        other = trace_hermitian_dual(code)
        assert code.size * other.size == 4**n
        assert trace_hermitian_dual(other) == code


@pytest.mark.parametrize("n", range(1, 7))
def test_macwilliams_matches_explicit_trace_hermitian_duals(
    n: int, random_code: RandomCodeFactory
) -> None:
    """Weight distributions of the dual agree with the transform."""
    for generators in (1, n, n + 2):
        code = random_code(Shape.gf4(n), generators)
        expected = macwilliams(
            weight_distribution(code, Metric.HAMMING), n, code.size
        )
        assert weight_distribution(dual(code, TH), Metric.HAMMING) == expected


@pytest.mark.parametrize("shape", DOOB_SHAPES, ids=str)
def test_macwilliams_matches_explicit_doob_duals(
    shape: Shape, random_code: RandomCodeFactory
) -> None:
    """The transform over the Doob scheme agrees with the Doob dual."""
    for generators in (1, 2, 3):
        code = random_code(shape, generators)
        expected = macwilliams(
            weight_distribution(code), shape.diameter, code.size
        )
        assert weight_distribution(doob_dual(code)) == expected


def test_hermitian_dual_of_linear_codes(
    random_code: RandomCodeFactory,
) -> None:
    """On F4-linear codes the Hermitian and trace-Hermitian duals agree."""
    for n in range(1, 5):
        code = f4_span(random_code(Shape.gf4(n), 2))
        assert hermitian_dual(code) == trace_hermitian_dual(code)


def test_even_codes_are_trace_hermitian_self_orthogonal(
    random_code: RandomCodeFactory,
) -> None:
    """Every even additive code is trace-Hermitian self-orthogonal."""
    for _ in range(300):
        code = random_code(Shape.gf4(4), 3)
        try:
            even = even_subcode(code)
        except PreconditionError:
            continue
        assert is_self_orthogonal(even, TH)


def test_gram_matrix_values() -> None:
    """Inner products of generator pairs for each form."""
    code = AdditiveCode.from_gf4([[1, 0], [2, 0]])
    assert gram_matrix(code, TH).tolist() == [[0, 1], [1, 0]]
    hermitian = gram_matrix(code, InnerProductForm.HERMITIAN)
    assert sorted(hermitian.ravel().tolist()) == [1, 1, 2, 3]


def test_self_duality() -> None:
    """The zero code is self-dual only in the zero ambient."""
    assert not is_self_dual(AdditiveCode.trivial(Shape.gf4(1)), TH)
    assert is_self_dual(AdditiveCode.trivial(Shape.gf4(0)), TH)
    assert is_self_orthogonal(AdditiveCode.trivial(Shape.of(1, 1, 1)))


def test_gf4_forms_need_gf4_shapes() -> None:
    """Trace-Hermitian and Hermitian duals reject Doob shapes."""
    code = AdditiveCode.trivial(Shape.of(1, 1, 0))
    with pytest.raises(IncompatibleFormError):
        dual(code, TH)
    with pytest.raises(IncompatibleFormError):
        dual(code, InnerProductForm.HERMITIAN)
    with pytest.raises(IncompatibleFormError):
        is_self_orthogonal(code, TH)


def test_forms_on_codes_without_generators() -> None:
    """Gram matrices of the zero code are empty."""
    trivial = AdditiveCode.trivial(Shape.gf4(3))
    assert gram_matrix(trivial, TH).shape == (0, 0)
    assert is_self_orthogonal(trivial, TH)
    assert trace_hermitian_dual(trivial) == AdditiveCode.full(Shape.gf4(3))
