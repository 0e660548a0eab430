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
"""Echelon forms of subgroups of Z4^L.

A subgroup is stored by rows of order 4 (the `P` rows) and rows of order 2
(the `2B` rows). The reduced form is unique for the subgroup:

1. scanning columns left to right, the first remaining row with an odd entry
   is scaled to have a 1 there and the column is cleared in every other row;
2. the remaining rows are all even; their halves are brought to reduced row
   echelon form over GF(2);
3. the order-4 rows are reduced into {0, 1} at the pivots of the order-2
   rows.

The pivots of both kinds are distinct, the order-4 rows are zero at every
other pivot, and the order-2 rows are zero at the order-4 pivots. Hence
`{P, 2P, 2B}` is independent over Z2 and `|C| = 4^|P| 2^|B|`.
"""
from typing import List, NamedTuple, Tuple

import numpy as np


class ReducedRows(NamedTuple):
    """Outcome of the two elimination phases on (possibly augmented) rows."""

    odd: "np.ndarray"
    odd_pivots: List[int]
    even: "np.ndarray"
    even_pivots: List[int]
    zero: "np.ndarray"


def _as_z4(rows: "np.ndarray", width: int) -> "np.ndarray":
    array = np.asarray(rows, dtype=np.int64)
    if array.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    return array.reshape(array.size // width, width) % 4


def reduce_rows(rows: "np.ndarray", pivot_columns: int) -> ReducedRows:
    """Runs the odd and even elimination phases.

    Pivots are only searched among the first `pivot_columns` columns; row
    operations are applied to whole rows, so trailing columns may carry a
    record of the operations (an augmented identity).

    Args:
        rows: Integer array `(N, W)`, read mod 4.
        pivot_columns: Number of leading columns eligible as pivots.

    Returns:
        Odd-pivot rows (pivot entry 1), even-pivot rows (pivot entry 2, all
        leading entries even) and the rows that vanish on the leading
        columns.
    """
    work = _as_z4(rows, np.shape(rows)[-1] if np.ndim(rows) == 2 else 0)
    remaining = list(range(work.shape[0]))
    odd_rows: List[int] = []
    odd_pivots: List[int] = []
    for column in range(pivot_columns):
        pivot = next((r for r in remaining if work[r, column] % 2), None)
        if pivot is None:
            continue
        if work[pivot, column] == 3:
            work[pivot] = (3 * work[pivot]) % 4
        factors = work[:, column].copy()
        factors[pivot] = 0
        work = (work - np.outer(factors, work[pivot])) % 4
        remaining.remove(pivot)
        odd_rows.append(pivot)
        odd_pivots.append(column)

    even = work[remaining]
    even_rows: List["np.ndarray"] = []
    even_pivots: List[int] = []
    for column in range(pivot_columns):
        if even.shape[0] == 0:
            break
        candidates = np.flatnonzero(even[:, column] == 2)
        if candidates.size == 0:
            continue
        pivot_row = even[candidates[0]].copy()
        hits = even[:, column] == 2
        even = (even - np.outer(hits.astype(np.int64), pivot_row)) % 4
        even = np.delete(even, candidates[0], axis=0)
        for index, row in enumerate(even_rows):
            if row[column] == 2:
                even_rows[index] = (row - pivot_row) % 4
        even_rows.append(pivot_row)
        even_pivots.append(column)

    width = work.shape[1]
    return ReducedRows(
        odd=work[odd_rows].reshape(len(odd_rows), width),
        odd_pivots=odd_pivots,
        even=np.array(even_rows, dtype=np.int64).reshape(
            len(even_rows), width
        ),
        even_pivots=even_pivots,
        zero=even.reshape(even.shape[0], width),
    )


def echelon(
    rows: "np.ndarray", width: int
) -> Tuple["np.ndarray", "np.ndarray"]:
    """Reduced generators of the subgroup of Z4^width spanned by `rows`.

    Args:
        rows: Integer array `(N, width)`, read mod 4.
        width: Number of columns (needed when `rows` is empty).

    Returns:
        `(gens4, gens2)` as uint8 arrays, order-4 rows sorted by pivot and
        order-2 rows sorted by pivot.
    """
    work = _as_z4(rows, width)
    reduced = reduce_rows(work, width)
    gens4 = reduced.odd.copy()
    gens2 = reduced.even
    for column, row in zip(reduced.even_pivots, gens2):
        high = gens4[:, column] >= 2
        gens4[high] = (gens4[high] - row) % 4
    return gens4.astype(np.uint8), gens2.astype(np.uint8)


def z4_left_kernel(matrix: "np.ndarray") -> "np.ndarray":
    """Generators of `{w in Z4^N : w M = 0 (mod 4)}` for an `N x W` matrix.

    The augmented matrix `[M | I]` is reduced; rows whose left part vanishes
    contribute their right part, rows whose left part is an even pivot row
    contribute twice their right part.
    """
    matrix = np.asarray(matrix, dtype=np.int64) % 4
    n, w = matrix.shape
    augmented = np.concatenate([matrix, np.eye(n, dtype=np.int64)], axis=1)
    reduced = reduce_rows(augmented, w)
    kernel = np.concatenate(
        [reduced.zero[:, w:], (2 * reduced.even[:, w:]) % 4], axis=0
    )
    return kernel.astype(np.int64)
