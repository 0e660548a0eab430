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

from doobcodes.utils import yaml_utils


def test_write_and_read_yaml(tmp_path):
    """Tests that written contents are read back unchanged."""
    path = tmp_path / "budgets.yaml"
    contents = {"span": 1024, "shape": [4, 1, 0], "label": "≥ 3"}
    yaml_utils.write_yaml(path, contents)
    assert yaml_utils.read_yaml(path) == contents
    assert list(yaml_utils.read_yaml(path)) == ["span", "shape", "label"]


def test_missing_files_and_directories(tmp_path):
    """Tests that missing paths raise FileNotFoundError."""
    with pytest.raises(FileNotFoundError):
        yaml_utils.read_yaml(tmp_path / "missing.yaml")
    with pytest.raises(FileNotFoundError):
        yaml_utils.write_yaml(tmp_path / "missing" / "x.yaml", {})


def test_is_yaml():
    """Tests the suffix check."""
    assert yaml_utils.is_yaml("manifest.yaml")
    assert yaml_utils.is_yaml("manifest.yml")
    assert not yaml_utils.is_yaml("b.codes")
