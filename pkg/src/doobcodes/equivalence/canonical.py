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
"""Canonical forms of additive codes.

Codes are compared by a total order on codes of one shape: position by
position, the sorted multisets of codeword prefixes, symbols ordered by
their rank (0, then order-2 symbols, then order-4 symbols). Target
positions are filled block by block, and inside a block in the sorted order
of the coordinate invariants, which every equivalence preserves.

The minimal image is found by a breadth-first beam over partial maps that
keeps every partial map whose prefix multiset is minimal, merges partial
maps that give the same prefix labels to all codewords and leave the same
twin classes unassigned, and tries only one coordinate of each twin class
(columns equal up to a cell map).
"""
import time
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from doobcodes.alphabet.symbols import symbol_table
from doobcodes.alphabet.vectors import symbols_of_rows, weights_of_rows
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.enums import CoordKind
from doobcodes.equivalence.cell_groups import cell_group
from doobcodes.equivalence.monomial import MonomialMap, apply
from doobcodes.exceptions import BudgetExceededError, ShapeMismatchError
from doobcodes.logger import get_logger
from doobcodes.utils.string_utils import get_human_readable_time

logger = get_logger(__name__)

InvariantKey = Tuple[Any, ...]
CoordinateInvariant = Tuple[Tuple[int, int, int], ...]
# perm, cells, prefix labels of the codewords, unassigned coordinates
_State = Tuple[Tuple[int, ...], Tuple[int, ...], "np.ndarray", Tuple[int, ...]]


class CanonicalCertificate(BaseModel):
    """Canonical serialization of a code with the map that produces it.

    Attributes:
        canonical_bytes: `to_bytes()` of the minimal image; equal for two
            codes exactly when they are equivalent.
        witness: A map sending the code to its minimal image.
        invariant_key: The prefilter key of the code.
    """

    canonical_bytes: bytes
    witness: MonomialMap
    invariant_key: InvariantKey

    class Config:
        """Pydantic configuration class."""

        frozen = True


def coordinate_invariants(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> List[CoordinateInvariant]:
    """Per-coordinate counts of `(symbol orbit, codeword weight)` pairs.

    Returns:
        For each coordinate, sorted `(orbit, weight, count)` triples over all
        codewords.
    """
    words = code.codewords(budgets)
    digits = symbols_of_rows(code.shape, words)
    weights = weights_of_rows(code.shape, words)
    stride = code.shape.diameter + 1
    result: List[CoordinateInvariant] = []
    for t, kind in enumerate(code.shape.kinds):
        orbit = cell_group(kind).orbits[digits[:, t]]
        values, counts = np.unique(orbit * stride + weights, return_counts=True)
        result.append(
            tuple(
                (int(v) // stride, int(v) % stride, int(c))
                for v, c in zip(values, counts)
            )
        )
    return result


def invariant_key(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> InvariantKey:
    """Equivalence invariant used to bucket codes before canonization.

    Made of the shape, the group type, the Doob weight distribution and, per
    block, the sorted coordinate invariants.
    """
    shape = code.shape
    weights = weights_of_rows(shape, code.codewords(budgets))
    distribution = np.bincount(weights, minlength=shape.diameter + 1)
    invariants = coordinate_invariants(code, budgets)
    blocks = tuple(
        tuple(sorted(invariants[t] for t in shape.coordinates(kind)))
        for kind in CoordKind
    )
    return (
        (shape.m, shape.n_prime, shape.n_double_prime),
        code.group_type,
        tuple(int(a) for a in distribution),
        blocks,
    )


def _twin_classes(code: AdditiveCode, digits: "np.ndarray") -> List[int]:
    """Class index of each coordinate; columns in one class are equal up to
    a cell map."""
    classes: Dict[Tuple[CoordKind, bytes], int] = {}
    result = []
    for t, kind in enumerate(code.shape.kinds):
        images = cell_group(kind).maps[:, digits[:, t]]
        order = np.lexsort(images.T[::-1])
        representative = images[order[0]].tobytes()
        result.append(classes.setdefault((kind, representative), len(classes)))
    return result


def _lexicographic_min(rows: "np.ndarray") -> Tuple[bytes, List[int]]:
    """Smallest row (as big-endian bytes) and the indices reaching it."""
    keys = [row.tobytes() for row in np.ascontiguousarray(rows.astype(">i8"))]
    smallest = min(keys)
    return smallest, [i for i, key in enumerate(keys) if key == smallest]


def _minimal_map(
    code: AdditiveCode,
    invariants: Sequence[CoordinateInvariant],
    budgets: Budgets,
) -> MonomialMap:
    shape = code.shape
    digits = symbols_of_rows(shape, code.codewords(budgets))
    kinds = shape.kinds
    targets: List[CoordinateInvariant] = []
    for kind in CoordKind:
        targets += sorted(invariants[s] for s in shape.coordinates(kind))
    twins = _twin_classes(code, digits)
    ranked = {
        kind: symbol_table(kind).rank[cell_group(kind).maps]
        for kind in CoordKind
    }

    states: List[_State] = [
        (
            (),
            (),
            np.zeros(digits.shape[0], np.int64),
            tuple(range(shape.length)),
        )
    ]
    for t in range(shape.length):
        table = ranked[kinds[t]]
        best = None
        winners: List[Tuple[int, int, int]] = []
        for index, (_, _, prefix, remaining) in enumerate(states):
            tried = set()
            for s in remaining:
                if kinds[s] != kinds[t] or invariants[s] != targets[t]:
                    continue
                if twins[s] in tried:
                    continue
                tried.add(twins[s])
                values = np.sort(
                    prefix[None, :] * 16 + table[:, digits[:, s]]
                )
                key, cells = _lexicographic_min(values)
                if best is None or key < best:
                    best, winners = key, []
                if key == best:
                    winners += [(index, s, h) for h in cells]
        merged: Dict[Tuple[bytes, Tuple[int, ...]], int] = {}
        next_states = []
        for index, s, h in winners:
            perm, cells, prefix, remaining = states[index]
            labels = np.unique(
                prefix * 16 + table[h, digits[:, s]], return_inverse=True
            )[1].astype(np.int64)
            rest = tuple(r for r in remaining if r != s)
            signature = (
                labels.tobytes(),
                tuple(sorted(twins[r] for r in rest)),
            )
            if signature in merged:
                continue
            merged[signature] = len(next_states)
            next_states.append((perm + (s,), cells + (h,), labels, rest))
        if len(next_states) > budgets.canonical_states:
            raise BudgetExceededError(
                "canonical_states", len(next_states), budgets.canonical_states
            )
        states = next_states
    perm, cells, _, _ = states[0]
    return MonomialMap(shape=shape, perm=perm, cells=cells)


def canonical_form(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> CanonicalCertificate:
    """Canonical certificate of a code.

    Raises:
        BudgetExceededError: if the code exceeds the span budget or the
            search keeps more partial maps than the canonical-state budget.
    """
    return _certificate(code, budgets.span, budgets.canonical_states)


@lru_cache(maxsize=2**16)
def _certificate(
    code: AdditiveCode, span_budget: int, state_budget: int
) -> CanonicalCertificate:
    budgets = Budgets(span=span_budget, canonical_states=state_budget)
    start = time.time()
    invariants = coordinate_invariants(code, budgets)
    witness = _minimal_map(code, invariants, budgets)
    image = apply(witness, code)
    logger.debug(
        "Canonical form of a size-%d code in `%s` took %s.",
        code.size,
        code.shape,
        get_human_readable_time(time.time() - start),
    )
    return CanonicalCertificate(
        canonical_bytes=image.to_bytes(),
        witness=witness,
        invariant_key=invariant_key(code, budgets),
    )


def canonical_code(
    code: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> AdditiveCode:
    """The minimal image of a code, its canonical representative."""
    return apply(canonical_form(code, budgets).witness, code)


def equivalent(
    a: AdditiveCode, b: AdditiveCode, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Whether some monomial map sends `a` onto `b`.

    Raises:
        ShapeMismatchError: if the codes live in different shapes.
    """
    if a.shape != b.shape:
        raise ShapeMismatchError(
            f"Codes in {a.shape} and {b.shape} are never equivalent."
        )
    if a.group_type != b.group_type:
        return False
    if a == b:
        return True
    if invariant_key(a, budgets) != invariant_key(b, budgets):
        return False
    return (
        canonical_form(a, budgets).canonical_bytes
        == canonical_form(b, budgets).canonical_bytes
    )
