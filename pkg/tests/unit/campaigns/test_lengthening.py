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
from doobcodes.campaigns.lengthening import (
    LENGTHENED_SHAPE,
    LengtheningResult,
    d41_two_weight_codes,
    lengthen_diameter11,
    shortening_parents,
)
from doobcodes.codes.operations import append_zero_coordinate
from doobcodes.corpus.code_format import read_codes
from doobcodes.corpus.manifest import data_path
from doobcodes.enums import CoordKind
from doobcodes.equivalence.class_store import ClassStore


@pytest.fixture(scope="module")
def lengthened_tables():
    return {
        size: read_codes(data_path(f"tables/lengthened{size}.codes"))
        for size in (128, 256)
    }


def test_seed_codes():
    """Tests that the six shipped two-weight codes are the seeds."""
    codes = d41_two_weight_codes()
    assert len(codes) == 6
    assert {code.shape for code in codes} == {Shape.of(4, 1, 0)}
    assert {code.size for code in codes} == {64}


def test_shortening_parents(table_codes):
    """Tests that a lengthened code shortens back to its seed."""
    lengthened = append_zero_coordinate(table_codes["B2"], CoordKind.QUAD)
    assert lengthened.shape == LENGTHENED_SHAPE
    assert shortening_parents(lengthened) == [(0, table_codes["B2"])]
    assert shortening_parents(lengthened, parents=[table_codes["B4"]]) == []

def test_type_counts_of_the_lengthened_tables(lengthened_tables):
    """Tests the group types of the shipped size-128 and size-256 codes."""
    result = LengtheningResult(
        levels=[], classes=lengthened_tables, distributions={}
    )
    assert result.largest_size == 256
    assert result.type_counts(128) == {(3, 1): 7, (2, 3): 2}
    assert result.type_counts(256) == {(3, 2): 6, (2, 4): 2}
    assert result.type_counts(512) == {}
    for size, codes in lengthened_tables.items():
        assert {code.shape for code in codes} == {LENGTHENED_SHAPE}
        assert {code.size for code in codes} == {size}


@pytest.mark.slow
def test_lengthening_to_diameter11():
    """Tests the 9 classes of size 128 and the 8 of size 256."""
    result = lengthen_diameter11()
    assert sorted(result.classes) == [128, 256]
    assert len(result.classes[128]) == 9
    assert len(result.classes[256]) == 8
    assert result.largest_size == 256
    assert [wd.as_dict() for wd in result.distributions[128]] == [
        {0: 1, 6: 42, 8: 55, 10: 30}
    ]
    assert [wd.as_dict() for wd in result.distributions[256]] == [
        {0: 1, 6: 54, 8: 111, 10: 90}
    ]
    assert result.levels[-1].classes == []
    assert result.type_counts(128) == {(3, 1): 7, (2, 3): 2}
    assert result.type_counts(256) == {(3, 2): 6, (2, 4): 2}
    for code in result.classes[128]:
        assert shortening_parents(code)


@pytest.mark.slow
def test_lengthening_finds_the_shipped_classes(lengthened_tables):
    """Tests that the found classes are those of the shipped tables."""
    result = lengthen_diameter11()
    for size, codes in lengthened_tables.items():
        store = ClassStore()
        store.update(result.classes[size])
        assert all(store.find(code) is not None for code in codes)
        assert len(store) == len(codes)
