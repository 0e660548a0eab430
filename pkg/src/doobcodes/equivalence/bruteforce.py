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
"""Brute-force equivalence over the whole monomial group.

Only meant as an independent check of the canonical forms on small shapes:
the group has `m! 12^m n'! 6^n' n''! 2^n''` elements.
"""
import itertools
from typing import Iterator, List

import numpy as np

from doobcodes.alphabet.vectors import symbols_of_rows
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.ambient import Ambient
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import CoordKind
from doobcodes.equivalence.cell_groups import cell_group
from doobcodes.exceptions import ShapeMismatchError


def _block_permutations(code: AdditiveCode) -> Iterator[List[int]]:
    shape = code.shape
    blocks = [list(shape.coordinates(kind)) for kind in CoordKind]
    for choice in itertools.product(
        *[itertools.permutations(block) for block in blocks]
    ):
        yield [source for block in choice for source in block]


def _image_indices(
    code: AdditiveCode, ambient: Ambient, budgets: Budgets
) -> Iterator["np.ndarray"]:
    """Per coordinate permutation, the ambient indices of the images of all
    codewords under every combination of cell maps, shape `(maps, |C|)`."""
    digits = symbols_of_rows(code.shape, code.codewords(budgets))
    kinds = code.shape.kinds
    for perm in _block_permutations(code):
        indices = np.zeros((1, digits.shape[0]), dtype=np.int64)
        for t, source in enumerate(perm):
            mapped = cell_group(kinds[t]).maps[:, digits[:, source]]
            indices = (
                indices[:, None, :] + ambient.strides[t] * mapped[None, :, :]
            ).reshape(-1, digits.shape[0])
        yield indices


def _membership(
    code: AdditiveCode, ambient: Ambient, budgets: Budgets
) -> "np.ndarray":
    member = np.zeros(ambient.order, dtype=bool)
    member[ambient.indices_of_rows(code.codewords(budgets))] = True
    return member


def equivalent_bruteforce(
    a: AdditiveCode, b: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Whether some element of the full monomial group maps `a` onto `b`.

    Raises:
        ShapeMismatchError: if the codes live in different shapes.
        BudgetExceededError: if the ambient exceeds the ambient budget.
    """
    if a.shape != b.shape:
        raise ShapeMismatchError(f"{a.shape} differs from {b.shape}.")
    if a.size != b.size:
        return False
    ambient = Ambient(a.shape, budgets=budgets)
    member = _membership(b, ambient, budgets)
    return any(
        bool(member[indices].all(axis=1).any())
        for indices in _image_indices(a, ambient, budgets)
    )


def automorphism_count_bruteforce(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> int:
    """Number of monomial maps fixing the code.

    Raises:
        BudgetExceededError: if the ambient exceeds the ambient budget.
    """
    ambient = Ambient(code.shape, budgets=budgets)
    member = _membership(code, ambient, budgets)
    return sum(
        int(member[indices].all(axis=1).sum())
        for indices in _image_indices(code, ambient, budgets)
    )
