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

from pathlib import Path
from typing import Any, Dict, Union

import yaml


def write_yaml(file_path: Union[str, Path], contents: Dict[Any, Any]) -> None:
    """Write contents as YAML format to file_path.

    Args:
        file_path: Path to YAML file.
        contents: Contents of YAML file as dict.

    Raises:
        FileNotFoundError: if directory does not exist.
    """
    dir_ = Path(file_path).parent
    if not dir_.is_dir():
        raise FileNotFoundError(f"Directory {dir_} does not exist.")
    Path(file_path).write_text(
        yaml.safe_dump(contents, sort_keys=False, allow_unicode=True),
        encoding="utf-8",
    )


def read_yaml(file_path: Union[str, Path]) -> Any:
    """Read YAML on file path and returns contents as dict.

    Args:
        file_path: Path to YAML file.

    Returns:
        Contents of the file in a dict.

    Raises:
        FileNotFoundError: if file does not exist.
    """
    path = Path(file_path)
    if path.is_file():
        return yaml.safe_load(path.read_text(encoding="utf-8"))
    else:
        raise FileNotFoundError(f"{file_path} does not exist.")


def is_yaml(file_path: Union[str, Path]) -> bool:
    """Returns True if file_path is YAML, else False

    Args:
        file_path: Path to YAML file.

    Returns:
        True if is yaml, else False.
    """
    if str(file_path).endswith(("yaml", "yml")):
        return True
    return False
