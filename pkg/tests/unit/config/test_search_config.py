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
from pydantic import ValidationError

from doobcodes.alphabet.shape import Shape
from doobcodes.config.search_config import SearchConfig
from doobcodes.enums import SeedOrder
from doobcodes.utils import yaml_utils


def test_allowed_weights():
    """Tests the minimum distance and the weight whitelist."""
    config = SearchConfig(min_distance=6, weights=[8, 6, 8])
    assert config.weights == (6, 8)
    assert config.allows(6)
    assert not config.allows(7)
    assert not config.allows(10)
    assert SearchConfig(min_distance=3).allows(17)
    assert not SearchConfig(min_distance=3).allows(2)


def test_dimension_target_cut():
    """Tests that a class is only extended if the target stays reachable."""
    config = SearchConfig(target=(8, 8))
    assert config.worth_extending(length=5, dimension=2)
    assert not config.worth_extending(length=5, dimension=1)
    assert config.worth_extending(length=8, dimension=8)
    assert SearchConfig().worth_extending(length=100, dimension=0)


@pytest.mark.parametrize(
    "values",
    [
        {"min_distance": 0},
        {"weights": []},
        {"weights": [0, 2]},
        {"threads": -1},
        {"unknown": 1},
    ],
)
def test_invalid_configs(values):
    """Tests that invalid values are rejected by validation."""
    with pytest.raises(ValidationError):
        SearchConfig(**values)


def test_config_from_yaml(tmp_path):
    """Tests reading a config file with a list shape and overrides."""
    path = tmp_path / "campaign.yaml"
    yaml_utils.write_yaml(
        path,
        {
            "min_distance": 6,
            "weights": [6, 8],
            "max_size": 64,
            "shape": [4, 1, 0],
            "budgets": {"span": 4096},
            "seed_order": "discovery",
        },
    )
    config = SearchConfig.from_yaml(str(path), {"threads": 2, "max_size": None})
    assert config.shape == Shape.of(4, 1, 0)
    assert config.max_size == 64
    assert config.threads == 2
    assert config.budgets.span == 4096
    assert config.seed_order == SeedOrder.DISCOVERY


def test_config_from_yaml_with_mapping_shape(tmp_path):
    """Tests that shapes may also be given by field name."""
    path = tmp_path / "campaign.yaml"
    yaml_utils.write_yaml(path, {"shape": {"m": 2, "n_double_prime": 3}})
    assert SearchConfig.from_yaml(str(path)).shape == Shape.of(2, 0, 3)


def test_config_from_bad_yaml(tmp_path):
    """Tests missing files and files without a mapping."""
    with pytest.raises(FileNotFoundError):
        SearchConfig.from_yaml(str(tmp_path / "missing.yaml"))
    path = tmp_path / "list.yaml"
    yaml_utils.write_yaml(path, [1, 2])
    with pytest.raises(ValueError):
        SearchConfig.from_yaml(str(path))
