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
from typing import Callable, Dict, List

import numpy as np
import pytest

from doobcodes.alphabet.shape import Shape
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.corpus.code_format import read_records
from doobcodes.corpus.manifest import data_path

RandomCodeFactory = Callable[[Shape, int], AdditiveCode]


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the long classification campaigns",
    )


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line(
        "markers", "slow: long-running campaign reproduction"
    )


def pytest_collection_modifyitems(
    config: pytest.Config, items: List[pytest.Item]
) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so that random samples are reproducible."""
    return np.random.default_rng(20211)


@pytest.fixture(scope="session")
def table_codes() -> Dict[str, AdditiveCode]:
    """The 26 size-64 two-weight codes B1-B6, C1-C8 and D1-D8 by label."""
    codes = {}
    for name in ("b", "c", "d"):
        for record in read_records(data_path(f"tables/{name}.codes")):
            codes[record.label] = record.code
    return codes


@pytest.fixture(scope="session")
def cyclic7() -> AdditiveCode:
    """The cyclic additive (7, 2^5, 5)_4 code."""
    (record,) = read_records(data_path("tables/cyclic7.codes"))
    return record.code


@pytest.fixture(scope="session")
def hexacode() -> AdditiveCode:
    """The hexacode, as listed among the all-rows-liftable codes."""
    records = read_records(data_path("tables/liftable.codes"))
    return records[1].code


def random_rows(
    shape: Shape, count: int, generator: np.random.Generator
) -> "np.ndarray":
    """Uniform random vectors of a shape as component rows."""
    rows = generator.integers(0, 4, size=(count, shape.width))
    bi = shape.bi_mask()
    rows[:, bi] = 2 * (rows[:, bi] % 2)
    return rows.astype(np.int64)


@pytest.fixture
def random_code(rng: np.random.Generator) -> RandomCodeFactory:
    """Factory of codes spanned by a few random vectors."""

    def _random_code(shape: Shape, generators: int) -> AdditiveCode:
        return AdditiveCode(shape, random_rows(shape, generators, rng))

    return _random_code
