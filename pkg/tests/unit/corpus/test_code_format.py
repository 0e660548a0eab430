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
import pytest

from doobcodes.alphabet.shape import Shape
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.corpus.code_format import (
    parse_code,
    parse_codes,
    parse_records,
    read_codes,
    render_code,
    render_codes,
    write_codes,
)
from doobcodes.exceptions import CodeFormatError

B1_TEXT = """
# first of the size-64 codes in D(4,1+0)
shape 4 1 0
label B1
21 10 10 10 | 10
31 01 01 01 | 01
--
20 02 20 00 | 00
02 22 02 00 | 00
"""


def test_parse_doob_records():
    """Tests that header, label, separator and rows are recorded."""
    (record,) = parse_records(B1_TEXT)
    assert record.shape == Shape.of(4, 1, 0)
    assert record.label == "B1"
    assert record.line == 3
    assert record.order4_rows == 2
    assert record.rows.shape == (4, 10)
    assert record.rows[0].tolist() == [2, 1, 1, 0, 1, 0, 1, 0, 2, 0]
    assert record.code.size == 64
    assert record.code.group_type == (2, 2)


def test_parse_gf4_and_separators_inside_rows():
    """Tests GF(4) letters and ignored `&`, `|` and `||` separators."""
    code = parse_code("gf4 3\n1 w & W\n")
    assert code == AdditiveCode.from_gf4([[1, 2, 3]])
    assert parse_code("gf4 2\n12 # comment\n") == parse_code("gf4 2\n1w\n")
    doob = parse_code("shape 1 1 1\n13 || 10 | 2\n")
    assert doob.generator_rows().shape[1] == 5
    assert parse_code("shape 0 0 0\n") == AdditiveCode.trivial(Shape())


def test_several_codes():
    """Tests that every header starts a new code."""
    codes = parse_codes(B1_TEXT + "\ngf4 1\n1\n\ngf4 1\n")
    assert [code.size for code in codes] == [64, 2, 1]
    with pytest.raises(CodeFormatError):
        parse_code("gf4 1\n1\ngf4 1\n")
    with pytest.raises(CodeFormatError):
        parse_code("")


@pytest.mark.parametrize(
    "text, line",
    [
        ("10\n", 1),
        ("shape 1 1\n", 1),
        ("shape 1 x 0\n", 1),
        ("gf4 -1\n", 1),
        ("gf4 2\n1\n", 2),
        ("gf4 2\n1x\n", 2),
        ("shape 0 1 0\n12\n", 2),
        ("shape 0 0 1\n4\n", 2),
        ("shape 1 0 0\n1\n", 2),
        ("shape 0 0 1\n--\n1\n", 3),
        ("shape 0 0 1\n--\n2\n--\n", 4),
    ],
)
def test_malformed_input(text, line):
    """Tests that errors carry the line number of the offending line."""
    with pytest.raises(CodeFormatError) as error:
        parse_records(text)
    assert error.value.line == line
    assert str(error.value).startswith(f"line {line}:")


def test_render_gf4_code():
    """Tests the rendering of a GF(4) code with a label."""
    code = AdditiveCode.from_gf4([[1, 2, 3]])
    assert render_code(code, "x") == "gf4 3\nlabel x\n1wW\n"


def test_render_doob_code():
    """Tests that the separator sits between order-4 and order-2 rows."""
    code = AdditiveCode.from_digits(Shape.of(1, 1, 1), [[0, 0, 2]])
    assert render_code(code) == "shape 1 1 1\n--\n00 | 00 | 2\n"
    text = render_code(parse_code(B1_TEXT), "B1")
    assert text.splitlines()[:2] == ["shape 4 1 0", "label B1"]
    assert parse_code(text) == parse_code(B1_TEXT)


def test_write_and_read_code_files(tmp_path, table_codes):
    """Tests that written files parse to the same codes."""
    codes = [table_codes[label] for label in ("B1", "C1", "D1")]
    path = tmp_path / "nested" / "codes.codes"
    write_codes(path, codes, ["B1", "C1", "D1"])
    assert read_codes(path) == codes
    assert render_codes(codes).count("\n\n") == 2
