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

from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.symbols import symbol_table
from doobcodes.alphabet.vectors import doob_ip_rows
from doobcodes.codes.additive_code import AdditiveCode, unit_rows
from doobcodes.codes.duality import doob_dual
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import Metric
from doobcodes.graphs.graph import Graph
from doobcodes.logger import get_logger

logger = get_logger(__name__)


class SyndromeMap:
    """Coset index of every vector, through the dual of the code.

    The syndrome of `x` is `(<x, h>)` over the stored generators `h` of the
    Doob dual: a Z4 digit per order-4 generator and a bit per order-2
    generator. Its kernel is the code, and its mixed-radix value numbers the
    cosets `0..|V|/|C| - 1`.
    """

    def __init__(self, code: AdditiveCode) -> None:
        self.code = code
        checks = doob_dual(code)
        self.checks = checks.generator_rows()
        self.radices = np.array(
            [4] * checks.gens4.shape[0] + [2] * checks.gens2.shape[0],
            dtype=np.int64,
        )
        strides = np.ones(len(self.radices), dtype=np.int64)
        for i in range(len(self.radices) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.radices[i + 1]
        self.strides = strides
        self.order = int(np.prod(self.radices)) if len(self.radices) else 1

    def digits(self, rows: "np.ndarray") -> "np.ndarray":
        """Syndrome digits of rows of components."""
        values = doob_ip_rows(
            self.code.shape,
            np.asarray(rows)[:, None, :],
            self.checks[None, :, :],
        )
        return np.where(self.radices == 2, values // 2, values)

    def indices(self, rows: "np.ndarray") -> "np.ndarray":
        """Coset index of rows of components."""
        return self.digits(rows) @ self.strides

    def add(self, index: "np.ndarray", digits: "np.ndarray") -> "np.ndarray":
        """Coset index of the sum of cosets given by index and by digits."""
        index = np.asarray(index, dtype=np.int64)
        own = (index[..., None] // self.strides) % self.radices
        return ((own + digits) % self.radices) @ self.strides


def connection_set(
    code: AdditiveCode, metric: Metric = Metric.DOOB
) -> Tuple[SyndromeMap, "np.ndarray"]:
    """Distinct nonzero syndromes of the weight-1 vectors."""
    syndromes = SyndromeMap(code)
    units = unit_rows(code.shape)
    if metric == Metric.HAMMING:
        units = _all_single_coordinate_rows(code.shape)
    if len(units) == 0 or len(syndromes.radices) == 0:
        return syndromes, np.zeros((0, len(syndromes.radices)), dtype=np.int64)
    digits = np.unique(syndromes.digits(units), axis=0)
    return syndromes, digits[digits.any(axis=1)].astype(np.int64)


def _all_single_coordinate_rows(shape: Shape) -> "np.ndarray":
    rows: List["np.ndarray"] = []
    for kind, offset in zip(shape.kinds, shape.offsets):
        table = symbol_table(kind)
        for digit in range(1, table.radix):
            row = np.zeros(shape.width, dtype=np.uint8)
            row[offset : offset + kind.components] = table.components[digit]
            rows.append(row)
    return np.array(rows, dtype=np.uint8).reshape(len(rows), shape.width)


def coset_graph(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Graph:
    """Coset graph of a code.

    Vertices are the cosets of the code; two cosets are adjacent when their
    difference contains a vector of weight 1. The graph is the Cayley graph
    of the syndrome group with the syndromes of the weight-1 vectors as
    connection set, and the translations by the unit syndromes are recorded
    as known automorphisms.

    Raises:
        BudgetExceededError: if the number of cosets exceeds the coset-index
            budget.
    """
    index = code.shape.ambient_order // code.size
    budgets.check("coset_index", index)
    syndromes, connection = connection_set(code, metric)
    vertices = np.arange(syndromes.order, dtype=np.int64)
    matrix = np.zeros((syndromes.order, syndromes.order), dtype=bool)
    for digits in connection:
        matrix[vertices, syndromes.add(vertices, digits)] = True
    translations = []
    for position in range(len(syndromes.radices)):
        unit = np.zeros(len(syndromes.radices), dtype=np.int64)
        unit[position] = 1
        translations.append(syndromes.add(vertices, unit))
    logger.debug(
        "Coset graph of a size-%d code in `%s`: %d vertices, degree %d.",
        code.size,
        code.shape,
        syndromes.order,
        len(connection),
    )
    return Graph(matrix, known_automorphisms=translations)


def ambient_graph(shape: Shape, budgets: Budgets = DEFAULT_BUDGETS) -> Graph:
    """The Doob graph `D(m, n'+n'')` itself, as the coset graph of `{0}`.

    Raises:
        BudgetExceededError: if the ambient exceeds the coset-index budget.
    """
    return coset_graph(AdditiveCode.trivial(shape), Metric.DOOB, budgets)
