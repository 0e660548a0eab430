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
"""Symbol tables of the three coordinate alphabets.

Every coordinate symbol is addressed by a small integer *digit*:

* Quad symbols `(a, b)` of Z4 x Z4 have digit `4 * a + b` (0..15);
* Bi symbols `(h, l)` of Z2 x Z2 have digit `2 * h + l` (0..3), which is also
  the integer form of the GF(4) element `h * omega + l`;
* Single symbols `x` of Z4 have digit `x` (0..3).

Inside vectors a symbol occupies one or two Z4 *components*. Bi bits are
stored doubled (values 0 or 2) so that all vector arithmetic is mod 4.
"""
from typing import Dict, List, Tuple

import numpy as np

from doobcodes.enums import CoordKind

# Weight-1 symbols of a Quad coordinate, i.e. the neighbours of 0 in the
# Shrikhande graph: 01, 03, 10, 30, 11, 33.
QUAD_UNIT_DIGITS: Tuple[int, ...] = (1, 3, 4, 12, 5, 15)


class SymbolTable:
    """Arithmetic and weight tables of one coordinate kind.

    Attributes:
        kind: The coordinate kind.
        radix: Number of symbols.
        components: Array `(radix, width)` mapping digits to stored
            components.
        weight: Weight of each symbol.
        add: Addition table of digits.
        neg: Negation of each digit.
        order: Additive order of each digit (1, 2 or 4).
        rank: Position of each digit in the canonical symbol order
            (0, then order-2 symbols, then order-4 symbols).
        unit_digits: Symbols of weight 1.
    """

    def __init__(self, kind: CoordKind) -> None:
        self.kind = kind
        self.radix = kind.radix
        self.width = kind.components
        self.components = np.array(
            [self._components_of(d) for d in range(self.radix)], dtype=np.uint8
        )
        self.add = np.array(
            [
                [
                    self.digit_of(
                        (self.components[a] + self.components[b]) % 4
                    )
                    for b in range(self.radix)
                ]
                for a in range(self.radix)
            ],
            dtype=np.int64,
        )
        self.neg = np.array(
            [
                self.digit_of((-self.components[d].astype(np.int64)) % 4)
                for d in range(self.radix)
            ],
            dtype=np.int64,
        )
        self.order = np.array(
            [self._order_of(d) for d in range(self.radix)], dtype=np.int64
        )
        self.weight = np.array(
            [self._weight_of(d) for d in range(self.radix)], dtype=np.int64
        )
        by_order = sorted(range(self.radix), key=lambda d: (self.order[d], d))
        self.rank = np.empty(self.radix, dtype=np.int64)
        self.rank[by_order] = np.arange(self.radix)
        self.unit_digits: Tuple[int, ...] = tuple(
            d for d in range(self.radix) if self.weight[d] == 1
        )

    def _components_of(self, digit: int) -> Tuple[int, ...]:
        if self.kind == CoordKind.QUAD:
            return digit // 4, digit % 4
        if self.kind == CoordKind.BI:
            return 2 * (digit >> 1), 2 * (digit & 1)
        return (digit,)

    def digit_of(self, components: "np.ndarray") -> int:
        """Digit of a symbol given by its stored components."""
        values = [int(c) for c in components]
        if self.kind == CoordKind.QUAD:
            return 4 * values[0] + values[1]
        if self.kind == CoordKind.BI:
            return values[0] + values[1] // 2
        return values[0]

    def _order_of(self, digit: int) -> int:
        comps = self.components[digit]
        if not comps.any():
            return 1
        if self.kind == CoordKind.BI or not (comps % 2).any():
            return 2
        return 4

    def _weight_of(self, digit: int) -> int:
        if digit == 0:
            return 0
        if self.kind == CoordKind.QUAD:
            return 1 if digit in QUAD_UNIT_DIGITS else 2
        return 1

    def digits(self, block: "np.ndarray") -> "np.ndarray":
        """Digits of a block of stored components.

        Args:
            block: Array `(..., width)` of components.

        Returns:
            Integer array of shape `block.shape[:-1]`.
        """
        block = block.astype(np.int64)
        if self.kind == CoordKind.QUAD:
            return 4 * block[..., 0] + block[..., 1]
        if self.kind == CoordKind.BI:
            return block[..., 0] + block[..., 1] // 2
        return block[..., 0]


SYMBOL_TABLES: Dict[CoordKind, SymbolTable] = {
    kind: SymbolTable(kind) for kind in CoordKind
}


def symbol_table(kind: CoordKind) -> SymbolTable:
    """Returns the shared symbol table of a coordinate kind."""
    return SYMBOL_TABLES[kind]


def digits_of_pairs(pairs: List[Tuple[int, int]], kind: CoordKind) -> List[int]:
    """Digits of symbols written as pairs, e.g. `[(2, 1)]` for Quad `21`."""
    if kind == CoordKind.QUAD:
        return [4 * a + b for a, b in pairs]
    return [2 * a + b for a, b in pairs]
