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
"""Weight-preserving automorphisms of the coordinate groups.

Every cell map is stored as a permutation of digits. The maps of a kind are
sorted lexicographically, so index 0 is the identity.
"""
import itertools
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from doobcodes.alphabet.symbols import SymbolTable, symbol_table
from doobcodes.enums import CoordKind


class CellGroup:
    """The group of weight-preserving automorphisms of one coordinate group.

    Attributes:
        kind: Coordinate kind.
        maps: Array `(g, radix)`; `maps[h, d]` is the image of digit `d`.
        compose: Array `(g, g)`; `compose[a, b]` is the index of the map
            "apply `a`, then `b`".
        inverse: Index of the inverse of each map.
        orbits: Orbit index of each digit, orbits numbered by their smallest
            digit.
    """

    def __init__(self, kind: CoordKind, maps: List[Tuple[int, ...]]) -> None:
        self.kind = kind
        self.maps = np.array(sorted(set(maps)), dtype=np.int64)
        lookup = {tuple(row): index for index, row in enumerate(self.maps)}
        size = len(self.maps)
        self.compose = np.array(
            [
                [lookup[tuple(self.maps[b][self.maps[a]])] for b in range(size)]
                for a in range(size)
            ],
            dtype=np.int64,
        )
        self.inverse = np.array(
            [int(np.flatnonzero(self.compose[a] == 0)[0]) for a in range(size)],
            dtype=np.int64,
        )
        radix = self.maps.shape[1]
        self.orbits = np.array(
            [int(self.maps[:, d].min()) for d in range(radix)], dtype=np.int64
        )

    def __len__(self) -> int:
        return len(self.maps)


def _linear_maps(table: SymbolTable, modulus: int) -> List[Tuple[int, ...]]:
    """Digit permutations induced by invertible 2x2 matrices."""
    maps = []
    points = [
        tuple(int(c) for c in table.components[d]) for d in range(table.radix)
    ]
    scale = 4 // modulus
    for a, b, c, d in itertools.product(range(modulus), repeat=4):
        if (a * d - b * c) % 2 == 0:
            continue
        image = []
        for x1, x2 in points:
            y1 = (a * (x1 // scale) + b * (x2 // scale)) % modulus
            y2 = (c * (x1 // scale) + d * (x2 // scale)) % modulus
            image.append(table.digit_of(np.array([y1 * scale, y2 * scale])))
        maps.append(tuple(image))
    return maps


@lru_cache(maxsize=None)
def cell_group(kind: CoordKind) -> CellGroup:
    """Weight-preserving automorphisms of the coordinate group of a kind.

    Quad: the 12 of the 96 automorphisms of Z4 x Z4 that fix the weight-1
    set `{01, 03, 10, 30, 11, 33}`; Bi: all 6 automorphisms of Z2 x Z2;
    Single: the identity and negation.
    """
    table = symbol_table(kind)
    if kind == CoordKind.SINGLE:
        return CellGroup(kind, [(0, 1, 2, 3), (0, 3, 2, 1)])
    if kind == CoordKind.BI:
        return CellGroup(kind, _linear_maps(table, 2))
    units = set(table.unit_digits)
    maps = [
        image
        for image in _linear_maps(table, 4)
        if {image[u] for u in units} == units
    ]
    return CellGroup(kind, maps)
