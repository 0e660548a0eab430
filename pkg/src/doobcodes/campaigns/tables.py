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
"""Class-count tables of classification campaigns."""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, validator

LOWER_BOUND_MARK = "≥"


class TableCell(BaseModel):
    """Number of equivalence classes of one `(n, k)` cell.

    Attributes:
        count: Classes found.
        exact: False when the cell is only a lower bound.
        maximal: Classes without an extension, when known.
    """

    count: int
    exact: bool = True
    maximal: Optional[int] = None

    @validator("count", "maximal")
    def _nonnegative(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 0:
            raise ValueError("Class counts are nonnegative.")
        return value

    def __str__(self) -> str:
        return f"{'' if self.exact else LOWER_BOUND_MARK}{self.count}"

    class Config:
        """Pydantic configuration class."""

        frozen = True


class ClassTable:
    """Grid of class counts `N(n, k, d)` indexed by length and binary
    dimension.

    Cells that were not computed are absent. A row whose exact count is 0 at
    some `k` is 0 at every larger `k` too.
    """

    def __init__(self, min_distance: int) -> None:
        self.min_distance = min_distance
        self._cells: Dict[Tuple[int, int], TableCell] = {}

    def record(
        self,
        length: int,
        dimension: int,
        count: int,
        exact: bool = True,
        maximal: Optional[int] = None,
    ) -> None:
        """Stores the count of a cell, replacing an earlier one."""
        self._cells[(length, dimension)] = TableCell(
            count=count, exact=exact, maximal=maximal
        )

    def cell(self, length: int, dimension: int) -> Optional[TableCell]:
        """The recorded cell, if any."""
        return self._cells.get((length, dimension))

    def count(self, length: int, dimension: int) -> Optional[int]:
        """The count of a cell, 0 above an exact zero of its row and None
        for cells that were not computed."""
        cell = self._cells.get((length, dimension))
        if cell is not None:
            return cell.count
        for k in range(dimension):
            below = self._cells.get((length, k))
            if below is not None and below.exact and below.count == 0:
                return 0
        return None

    def row(self, length: int) -> Dict[int, TableCell]:
        """Recorded cells of one length, by dimension."""
        return {
            k: cell
            for (n, k), cell in sorted(self._cells.items())
            if n == length
        }

    @property
    def lengths(self) -> List[int]:
        return sorted({n for n, _ in self._cells})

    @property
    def dimensions(self) -> List[int]:
        if not self._cells:
            return []
        return list(range(max(k for _, k in self._cells) + 1))

    def is_monotone(self) -> bool:
        """Whether no row has a positive exact count after an exact zero."""
        for length in self.lengths:
            vanished = False
            for cell in self.row(length).values():
                if vanished and cell.exact and cell.count:
                    return False
                vanished = vanished or (cell.exact and cell.count == 0)
        return True

    def _grid(self) -> List[List[str]]:
        header = ["n"] + [str(k) for k in self.dimensions]
        rows = [header]
        for length in self.lengths:
            row = self.row(length)
            rows.append(
                [str(length)]
                + [str(row[k]) if k in row else "" for k in self.dimensions]
            )
        return rows

    def render(self) -> str:
        """Aligned text grid, one row per length, `≥` marking lower
        bounds."""
        grid = self._grid()
        widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
        return "\n".join(
            " ".join(entry.rjust(width) for entry, width in zip(row, widths))
            .rstrip()
            for row in grid
        )

    def render_csv(self) -> str:
        """Comma-separated grid with the same entries as `render`."""
        return "\n".join(",".join(row) for row in self._grid())

    def summary_items(self) -> Dict[str, str]:
        """One entry per recorded cell, keyed `N(n,k,d)`, after the
        distance."""
        items = {"min_distance": str(self.min_distance)}
        for (n, k), cell in sorted(self._cells.items()):
            value = str(cell)
            if cell.maximal:
                value += f" maximal={cell.maximal}"
            items[f"N({n},{k},{self.min_distance})"] = value
        return items

    def summary(self) -> str:
        """`key: value` lines, one per recorded cell."""
        return "\n".join(
            f"{key}: {value}" for key, value in self.summary_items().items()
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ClassTable)
            and self.min_distance == other.min_distance
            and self._cells == other._cells
        )

    def __repr__(self) -> str:
        return f"ClassTable(d={self.min_distance}, cells={len(self._cells)})"


def emit_tables(table: ClassTable, csv: bool = False) -> str:
    """Renders a campaign table as aligned text or CSV."""
    return table.render_csv() if csv else table.render()


__all__ = ["ClassTable", "LOWER_BOUND_MARK", "TableCell", "emit_tables"]
