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
"""Breadth-first search over a whole ambient.

Vertices of the Doob graph `D(m, n'+n'')` (or of `H(n, 4)` for `GF(4)^n`)
are addressed by a mixed-radix index of their digits, coordinate 0 most
significant, radix 16 for Quad and 4 for Bi and Single coordinates.
"""
import time
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np

from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.symbols import symbol_table
from doobcodes.alphabet.vectors import rows_of_symbols, symbols_of_rows
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.weights import IntersectionArray, NotCompletelyRegular
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import Metric
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import (
    get_human_readable_count,
    get_human_readable_time,
)

logger = get_logger(__name__)

UNREACHED = -1


class Ambient:
    """Index space of all vectors of a shape.

    Attributes:
        shape: The shape.
        metric: Graph whose distance the searches compute; for Hamming,
            every nonzero Quad symbol is a neighbour move.
        order: Number of vertices.
        radices: Radix of each coordinate.
        strides: Index increment of each coordinate.
    """

    def __init__(
        self,
        shape: Shape,
        metric: Metric = Metric.DOOB,
        budgets: Budgets = DEFAULT_BUDGETS,
    ) -> None:
        """Checks the ambient budget and prepares the move tables.

        Raises:
            BudgetExceededError: if the ambient is larger than the budget.
        """
        budgets.check("ambient", shape.ambient_order)
        self.shape = shape
        self.metric = metric
        self.order = shape.ambient_order
        self.radices = [kind.radix for kind in shape.kinds]
        strides: List[int] = []
        stride = 1
        for radix in reversed(self.radices):
            strides.append(stride)
            stride *= radix
        self.strides = strides[::-1]

    def _moves(self, coordinate: int) -> Tuple[int, ...]:
        table = symbol_table(self.shape.kinds[coordinate])
        if self.metric == Metric.DOOB:
            return table.unit_digits
        return tuple(range(1, table.radix))

    @property
    def degree(self) -> int:
        """Number of neighbours of every vertex."""
        return sum(len(self._moves(i)) for i in range(self.shape.length))

    def indices_of_digits(self, digits: "np.ndarray") -> "np.ndarray":
        """Indices of rows of per-coordinate digits."""
        digits = np.asarray(digits, dtype=np.int64).reshape(
            -1, self.shape.length
        )
        return digits @ np.array(self.strides, dtype=np.int64)

    def indices_of_rows(self, rows: "np.ndarray") -> "np.ndarray":
        """Indices of rows of stored components."""
        return self.indices_of_digits(symbols_of_rows(self.shape, rows))

    def digits_of_indices(self, indices: "np.ndarray") -> "np.ndarray":
        """Per-coordinate digits of vertex indices."""
        indices = np.asarray(indices, dtype=np.int64)
        return np.stack(
            [
                (indices // stride) % radix
                for stride, radix in zip(self.strides, self.radices)
            ],
            axis=-1,
        ).reshape(indices.shape + (self.shape.length,))

    def rows_of_indices(self, indices: "np.ndarray") -> "np.ndarray":
        """Stored components of vertex indices."""
        digits = self.digits_of_indices(np.atleast_1d(indices))
        digits = digits.reshape(-1, self.shape.length)
        return rows_of_symbols(self.shape, digits)

    def neighbours(self, indices: "np.ndarray") -> Iterator["np.ndarray"]:
        """Yields, per neighbour move, the moved copy of `indices`."""
        indices = np.asarray(indices, dtype=np.int64)
        for coordinate, (stride, radix) in enumerate(
            zip(self.strides, self.radices)
        ):
            table = symbol_table(self.shape.kinds[coordinate])
            digit = (indices // stride) % radix
            for move in self._moves(coordinate):
                yield indices + (table.add[digit, move] - digit) * stride

    def translate(
        self, indices: "np.ndarray", row: "np.ndarray"
    ) -> "np.ndarray":
        """Indices of `v + x` for a fixed vector `x` given by components."""
        indices = np.asarray(indices, dtype=np.int64)
        shift = symbols_of_rows(self.shape, np.asarray(row)[None, :])[0]
        result = np.zeros_like(indices)
        for coordinate, (stride, radix) in enumerate(
            zip(self.strides, self.radices)
        ):
            table = symbol_table(self.shape.kinds[coordinate])
            digit = (indices // stride) % radix
            result += table.add[digit, shift[coordinate]] * stride
        return result

    def double(self, indices: "np.ndarray") -> "np.ndarray":
        """Indices of `2v`."""
        indices = np.asarray(indices, dtype=np.int64)
        result = np.zeros_like(indices)
        for coordinate, (stride, radix) in enumerate(
            zip(self.strides, self.radices)
        ):
            table = symbol_table(self.shape.kinds[coordinate])
            digit = (indices // stride) % radix
            result += table.add[digit, digit] * stride
        return result

    def distances(
        self,
        code: Union[AdditiveCode, "np.ndarray"],
        max_distance: Optional[int] = None,
    ) -> "np.ndarray":
        """Multi-source breadth-first search from a set of vertices.

        Args:
            code: A code of this shape, or an array of source indices.
            max_distance: Stop after this many layers; farther vertices keep
                the value `UNREACHED`.

        Returns:
            int8 array of distances indexed by vertex.
        """
        start = time.time()
        if isinstance(code, AdditiveCode):
            sources = self.indices_of_rows(code.codewords())
        else:
            sources = np.asarray(code, dtype=np.int64)
        dist = np.full(self.order, UNREACHED, dtype=np.int8)
        dist[sources] = 0
        frontier = np.unique(sources)
        level = 0
        while frontier.size and (max_distance is None or level < max_distance):
            found = []
            for moved in self.neighbours(frontier):
                fresh = moved[dist[moved] == UNREACHED]
                dist[fresh] = level + 1
                found.append(fresh)
            if not found:
                break
            frontier = np.unique(np.concatenate(found))
            if frontier.size:
                level += 1
        logger.debug(
            "BFS over `%s` reached distance %d in %s (%s vertices).",
            self.shape,
            level,
            get_human_readable_time(time.time() - start),
            get_human_readable_count(self.order),
        )
        return dist

    def neighbour_counts(
        self, dist: "np.ndarray"
    ) -> Tuple["np.ndarray", "np.ndarray"]:
        """For every vertex, the numbers of neighbours one layer farther and
        one layer closer."""
        farther = np.zeros(self.order, dtype=np.int16)
        closer = np.zeros(self.order, dtype=np.int16)
        everything = np.arange(self.order, dtype=np.int64)
        level = dist.astype(np.int16)
        for moved in self.neighbours(everything):
            other = level[moved]
            farther += other == level + 1
            closer += other == level - 1
        return farther, closer


def covering_radius(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """Largest distance of an ambient vertex to the code.

    Raises:
        BudgetExceededError: if the ambient exceeds the ambient budget.
    """
    return int(Ambient(code.shape, metric, budgets).distances(code).max())


def distance_distribution(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Tuple[int, ...]:
    """Numbers of ambient vertices at each distance from the code."""
    dist = Ambient(code.shape, metric, budgets).distances(code)
    return tuple(int(count) for count in np.bincount(dist))


def intersection_array(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Union[IntersectionArray, NotCompletelyRegular]:
    """Intersection array of the distance partition, if it is equitable.

    Every vertex at distance `i` must have the same number `b_i` of
    neighbours at distance `i + 1` and `c_i` at distance `i - 1`.

    Returns:
        The array, or a description of the first vertex (in index order)
        whose counts differ from those of the first vertex of its class.

    Raises:
        BudgetExceededError: if the ambient exceeds the ambient budget.
    """
    start = time.time()
    ambient = Ambient(code.shape, metric, budgets)
    dist = ambient.distances(code)
    farther, closer = ambient.neighbour_counts(dist)
    rho = int(dist.max())
    b: List[int] = []
    c: List[int] = []
    for level in range(rho + 1):
        members = np.flatnonzero(dist == level)
        for name, counts, out in (("b", farther, b), ("c", closer, c)):
            values = counts[members]
            bad = np.flatnonzero(values != values[0])
            if bad.size:
                vertex = members[bad[0]]
                return NotCompletelyRegular(
                    vertex=tuple(
                        int(d) for d in ambient.digits_of_indices(vertex)
                    ),
                    distance=level,
                    parameter=name,
                    expected=int(values[0]),
                    found=int(values[bad[0]]),
                )
            out.append(int(values[0]))
    logger.info(
        "Distance partition of a size-%d code in `%s` is equitable "
        "(rho=%d) in %s.",
        code.size,
        code.shape,
        rho,
        get_human_readable_time(time.time() - start),
    )
    return IntersectionArray(b=tuple(b[:rho]), c=tuple(c[1:]))


def is_completely_regular(
    code: AdditiveCode,
    metric: Metric = Metric.DOOB,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> bool:
    """Whether the distance partition of the code is equitable."""
    array = intersection_array(code, metric, budgets)
    return isinstance(array, IntersectionArray)
