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
from typing import Callable

import pytest
from click.testing import CliRunner

from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.corpus.code_format import write_codes

CodeFileFactory = Callable[..., str]


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def code_file(tmp_path) -> CodeFileFactory:
    """Factory writing codes to a file below `tmp_path`."""

    def _code_file(*codes: AdditiveCode, name: str = "code") -> str:
        path = tmp_path / f"{name}.codes"
        write_codes(path, codes)
        return str(path)

    return _code_file
