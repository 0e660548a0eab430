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
import pytest

from doobcodes.alphabet.shape import Shape
from doobcodes.campaigns.two_weight import (
    DIAMETER9_AMBIENTS,
    classify_diameter9,
    classify_doob_two_weight,
    classify_weight_constrained,
)
from doobcodes.codes.weights import codeword_weights
from doobcodes.config.search_config import SearchConfig
from doobcodes.enums import Metric


def _counts(buckets):
    return {key: len(codes) for key, codes in buckets.items()}


def test_diameter9_ambients():
    """Tests the list of diameter-9 ambients."""
    assert len(DIAMETER9_AMBIENTS) == 19
    assert len(set(DIAMETER9_AMBIENTS)) == 19
    for shape in DIAMETER9_AMBIENTS:
        assert shape.diameter == 9
        assert 2 * shape.m + shape.n_double_prime >= 6 or shape.is_gf4


def test_weight_constrained_buckets():
    """Tests the buckets of a small whitelist campaign."""
    config = SearchConfig(
        shape=Shape.of(0, 2, 0), min_distance=2, weights=[2], threads=1
    )
    buckets = classify_weight_constrained(config)
    assert _counts(buckets) == {(2, (0, 1)): 1, (4, (0, 2)): 1}
    for codes in buckets.values():
        for code in codes:
            weights = codeword_weights(code, Metric.DOOB)
            assert set(weights[weights > 0]) == {2}


def test_buckets_are_sorted():
    """Tests that buckets are ordered by size, then by order-4 rank."""
    buckets = classify_doob_two_weight(
        Shape.of(1, 0, 0), weights=[1, 2], max_size=None, threads=1
    )
    keys = list(buckets)
    assert keys == sorted(keys, key=lambda key: (key[0], -key[1][0]))
    assert max(size for size, _ in keys) == 16


def test_max_size_bounds_the_buckets():
    """Tests that no bucket exceeds the maximal size."""
    buckets = classify_doob_two_weight(
        Shape.of(1, 0, 0), weights=[1, 2], max_size=4, threads=1
    )
    assert max(size for size, _ in buckets) == 4


def test_diameter9_runs_every_shape(mocker):
    """Tests that the diameter-9 sweep classifies each requested shape."""
    classify = mocker.patch(
        "doobcodes.campaigns.two_weight.classify_doob_two_weight",
        return_value={},
    )
    shapes = DIAMETER9_AMBIENTS[:2]
    result = classify_diameter9(shapes=shapes, threads=2)
    assert list(result) == list(shapes)
    assert classify.call_count == 2
    classify.assert_any_call(shapes[1], (6, 8), 64, None, 2)


def test_diameter9_sweep_counts_classes():
    """Tests a sweep over small ambients without mocking the search."""
    shapes = (Shape.of(0, 2, 0), Shape.of(1, 0, 0))
    result = classify_diameter9(
        weights=(2,), max_size=4, shapes=shapes, threads=1
    )
    assert list(result) == list(shapes)
    assert _counts(result[shapes[0]]) == {(2, (0, 1)): 1, (4, (0, 2)): 1}
    whitelisted = classify_doob_two_weight(
        shapes[1], weights=(2,), max_size=4, threads=1
    )
    assert _counts(result[shapes[1]]) == _counts(whitelisted)


@pytest.mark.slow
@pytest.mark.parametrize(
    "shape, expected",
    [
        (Shape.of(4, 1, 0), {(64, (3, 0)): 4, (64, (2, 2)): 2}),
        (Shape.of(3, 0, 3), {(64, (3, 0)): 6, (64, (2, 2)): 2}),
        (Shape.of(0, 9, 0), {(64, (0, 6)): 8}),
    ],
)
def test_size64_two_weight_codes(shape, expected):
    """Tests the class counts of the size-64 two-weight codes."""
    counts = _counts(classify_doob_two_weight(shape))
    assert {key: n for key, n in counts.items() if key[0] == 64} == expected


@pytest.mark.slow
def test_smaller_two_weight_codes():
    """Tests some class counts of the smaller codes."""
    assert _counts(classify_doob_two_weight(Shape.of(4, 1, 0)))[
        (16, (2, 0))
    ] == 44
    assert _counts(classify_doob_two_weight(Shape.of(3, 0, 3)))[
        (16, (1, 2))
    ] == 14
    counts = _counts(classify_doob_two_weight(Shape.of(2, 3, 2)))
    assert counts[(32, (1, 3))] == 2
    assert not any(size == 64 for size, _ in counts)
