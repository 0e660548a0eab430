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
"""Plain-text format of generator matrices.

A file holds one or more codes. Each code starts with a header line,
`shape m n' n''` for a Doob ambient or `gf4 n` for `GF(4)^n`, followed by an
optional `label ...` line and the generator rows. Rows above a line of
dashes may have any order, rows below it must have order 2.

In a Doob row a Quad coordinate is written as two Z4 digits, a Bi
coordinate as two bits and a Single coordinate as one Z4 digit; spaces,
`&` and the column-group separators `|` and `||` are ignored. In a `GF(4)`
row every coordinate is one character out of `0`, `1`, `w` (or `2`) and
`W` (or `3`). Everything after `#` is a comment.

    shape 4 1 0
    label B1
    21 10 10 10 | 10
    31 01 01 01 | 01
    --
    20 02 20 00 | 00
    02 22 02 00 | 00
"""
import re
from pathlib import Path
from typing import Iterable, List, NamedTuple, Optional, Sequence, Union

import numpy as np

from doobcodes.alphabet.shape import Shape
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.enums import CoordKind
from doobcodes.exceptions import CodeFormatError

GF4_CHARACTERS = {"0": 0, "1": 1, "2": 2, "w": 2, "3": 3, "W": 3}
GF4_RENDERING = "01wW"
_SEPARATOR = re.compile(r"^-{2,}$")
_IGNORED = re.compile(r"[\s|&]")


class CodeRecord(NamedTuple):
    """A code as written in a file.

    Attributes:
        shape: Declared shape.
        rows: uint8 array of the rows in file order, as components.
        order4_rows: Number of rows above the separator line, or all rows
            when there is none.
        label: Text of the `label` line.
        line: Line number of the header.
    """

    shape: Shape
    rows: "np.ndarray"
    order4_rows: int
    label: Optional[str]
    line: int

    @property
    def code(self) -> AdditiveCode:
        """The code spanned by the rows."""
        return AdditiveCode(self.shape, self.rows)


class _Draft:
    def __init__(self, shape: Shape, gf4: bool, line: int) -> None:
        self.shape = shape
        self.gf4 = gf4
        self.line = line
        self.label: Optional[str] = None
        self.rows: List["np.ndarray"] = []
        self.separator: Optional[int] = None

    def record(self) -> CodeRecord:
        if self.rows:
            rows = np.array(self.rows, dtype=np.uint8)
        else:
            rows = np.zeros((0, self.shape.width), dtype=np.uint8)
        return CodeRecord(
            shape=self.shape,
            rows=rows,
            order4_rows=(
                len(self.rows) if self.separator is None else self.separator
            ),
            label=self.label,
            line=self.line,
        )


def _parse_header(words: List[str], number: int) -> _Draft:
    try:
        values = [int(word) for word in words[1:]]
    except ValueError:
        raise CodeFormatError(f"Malformed header `{' '.join(words)}`.", number)
    if words[0] == "gf4" and len(values) == 1 and values[0] >= 0:
        return _Draft(Shape.gf4(values[0]), True, number)
    if words[0] == "shape" and len(values) == 3 and min(values) >= 0:
        return _Draft(Shape.of(*values), False, number)
    raise CodeFormatError(f"Malformed header `{' '.join(words)}`.", number)


def _parse_gf4_row(draft: _Draft, text: str, number: int) -> "np.ndarray":
    n = draft.shape.n_prime
    if len(text) != n:
        raise CodeFormatError(
            f"A row of GF(4)^{n} needs {n} symbols, got {len(text)}.", number
        )
    row = np.zeros(draft.shape.width, dtype=np.uint8)
    for coordinate, character in enumerate(text):
        if character not in GF4_CHARACTERS:
            raise CodeFormatError(
                f"Unknown GF(4) symbol `{character}`.", number
            )
        digit = GF4_CHARACTERS[character]
        row[2 * coordinate] = 2 * (digit >> 1)
        row[2 * coordinate + 1] = 2 * (digit & 1)
    return row


def _parse_doob_row(draft: _Draft, text: str, number: int) -> "np.ndarray":
    shape = draft.shape
    expected = 2 * shape.m + 2 * shape.n_prime + shape.n_double_prime
    if len(text) != expected or not text.isdigit():
        raise CodeFormatError(
            f"A row of {shape} needs {expected} digits, got `{text}`.", number
        )
    digits = np.array([int(character) for character in text], dtype=np.uint8)
    for kind in CoordKind:
        start, stop = shape.block(kind)
        block = digits[start:stop]
        top = 1 if kind == CoordKind.BI else 3
        if (block > top).any():
            raise CodeFormatError(
                f"Digit out of range in the {kind} block of `{text}`.", number
            )
    return np.where(shape.bi_mask(), 2 * digits, digits).astype(np.uint8)


def parse_records(text: str) -> List[CodeRecord]:
    """Parses every code of a text.

    Raises:
        CodeFormatError: on a malformed header or token, a row of the wrong
            length, a row before any header, or an order-4 row below the
            separator line.
    """
    drafts: List[_Draft] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] in ("shape", "gf4"):
            drafts.append(_parse_header(words, number))
            continue
        if not drafts:
            raise CodeFormatError("Generator row before any header.", number)
        draft = drafts[-1]
        if words[0] == "label":
            draft.label = line[len("label") :].strip()
        elif _SEPARATOR.match(line):
            if draft.separator is not None:
                raise CodeFormatError("Second separator line.", number)
            draft.separator = len(draft.rows)
        else:
            compact = _IGNORED.sub("", line)
            if draft.gf4:
                row = _parse_gf4_row(draft, compact, number)
            else:
                row = _parse_doob_row(draft, compact, number)
            if draft.separator is not None and (row % 2).any():
                raise CodeFormatError(
                    "Row of order 4 below the separator line.", number
                )
            draft.rows.append(row)
    return [draft.record() for draft in drafts]


def parse_codes(text: str) -> List[AdditiveCode]:
    """Parses every code of a text."""
    return [record.code for record in parse_records(text)]


def parse_code(text: str) -> AdditiveCode:
    """Parses a text holding exactly one code.

    Raises:
        CodeFormatError: if the text is malformed or holds no code or
            several.
    """
    records = parse_records(text)
    if len(records) != 1:
        raise CodeFormatError(f"Expected one code, found {len(records)}.")
    return records[0].code


def read_records(path: Union[str, Path]) -> List[CodeRecord]:
    """Parses a code file."""
    return parse_records(Path(path).read_text(encoding="utf-8"))


def read_codes(path: Union[str, Path]) -> List[AdditiveCode]:
    """Parses every code of a file."""
    return [record.code for record in read_records(path)]


def _render_row(shape: Shape, row: "np.ndarray") -> str:
    if shape.is_gf4:
        digits = 2 * (row[0::2] // 2) + row[1::2] // 2
        return "".join(GF4_RENDERING[int(d)] for d in digits)
    groups = []
    for kind in CoordKind:
        start, stop = shape.block(kind)
        block = row[start:stop]
        if kind == CoordKind.BI:
            block = block // 2
        width = kind.components
        groups.append(
            " ".join(
                "".join(str(int(c)) for c in block[i : i + width])
                for i in range(0, len(block), width)
            )
        )
    return " | ".join(group for group in groups if group)


def render_code(code: AdditiveCode, label: Optional[str] = None) -> str:
    """Writes a code in echelon form.

    Codes in `GF(4)^n` get a `gf4` header and no separator line.
    """
    shape = code.shape
    if shape.is_gf4:
        lines = [f"gf4 {shape.n_prime}"]
    else:
        lines = [f"shape {shape.m} {shape.n_prime} {shape.n_double_prime}"]
    if label:
        lines.append(f"label {label}")
    lines += [_render_row(shape, row) for row in code.gens4]
    if not shape.is_gf4:
        lines.append("--")
    lines += [_render_row(shape, row) for row in code.gens2]
    return "\n".join(lines) + "\n"


def render_codes(
    codes: Iterable[AdditiveCode], labels: Optional[Sequence[str]] = None
) -> str:
    """Writes several codes, separated by blank lines."""
    codes = list(codes)
    names = list(labels) if labels is not None else [None] * len(codes)
    return "\n".join(
        render_code(code, name) for code, name in zip(codes, names)
    )


def write_codes(
    path: Union[str, Path],
    codes: Iterable[AdditiveCode],
    labels: Optional[Sequence[str]] = None,
) -> None:
    """Writes codes to a file, creating its directory."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_codes(codes, labels), encoding="utf-8")


__all__ = [
    "CodeRecord",
    "parse_code",
    "parse_codes",
    "parse_records",
    "read_codes",
    "read_records",
    "render_code",
    "render_codes",
    "write_codes",
]
