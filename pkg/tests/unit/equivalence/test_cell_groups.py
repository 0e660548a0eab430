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
import numpy as np
import pytest

from doobcodes.alphabet.symbols import symbol_table
from doobcodes.enums import CoordKind
from doobcodes.equivalence.cell_groups import cell_group


@pytest.mark.parametrize(
    "kind, order, orbits",
    [(CoordKind.QUAD, 12, 4), (CoordKind.BI, 6, 2), (CoordKind.SINGLE, 2, 3)],
)
def test_group_orders(kind: CoordKind, order: int, orbits: int) -> None:
    """Sizes of the cell groups and numbers of symbol orbits."""
    group = cell_group(kind)
    assert len(group) == order
    assert len(set(group.orbits.tolist())) == orbits
    assert group.maps[0].tolist() == list(range(kind.radix))


@pytest.mark.parametrize("kind", list(CoordKind))
def test_cell_maps_are_weight_preserving_automorphisms(
    kind: CoordKind,
) -> None:
    """Every map respects addition and the Doob weight."""
    table = symbol_table(kind)
    for images in cell_group(kind).maps:
        assert (table.weight[images] == table.weight).all()
        assert (images[table.add] == table.add[images][:, images]).all()


@pytest.mark.parametrize("kind", list(CoordKind))
def test_composition_table(kind: CoordKind) -> None:
    """`compose[a, b]` applies `a` first; inverses compose to the
    identity."""
    group = cell_group(kind)
    for a, first in enumerate(group.maps):
        assert group.compose[a, group.inverse[a]] == 0
        for b, second in enumerate(group.maps):
            assert (group.maps[group.compose[a, b]] == second[first]).all()


def test_quad_orbits() -> None:
    """Units, order-2 symbols and the other order-4 symbols."""
    orbits = cell_group(CoordKind.QUAD).orbits
    assert sorted(np.flatnonzero(orbits == 1).tolist()) == [1, 3, 4, 5, 12, 15]
    assert sorted(np.flatnonzero(orbits == 2).tolist()) == [2, 8, 10]
