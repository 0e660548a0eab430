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
"""Manifest of the shipped code corpus."""
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, root_validator, validator

from doobcodes.alphabet.shape import Shape
from doobcodes.constants import CORPUS_MANIFEST_NAME
from doobcodes.corpus.code_format import CodeRecord, read_records
from doobcodes.utils import yaml_utils

DATA_DIRECTORY = Path(__file__).parent / "data"


class TypeCount(BaseModel):
    """Number of codes of one group type in a bucket."""

    type: Tuple[int, int]
    count: int

    class Config:
        """Pydantic configuration class."""

        frozen = True


class CorpusBucket(BaseModel):
    """One listing of codes with the checks its codes must pass.

    Attributes:
        name: Display name.
        shape: Ambient `(m, n', n'')`.
        size: Size of every code, if fixed.
        type: Group type `(delta, gamma)` of every code, if fixed.
        count: Number of listed codes.
        file: Code file relative to the data directory; None for empty
            buckets.
        weights: Whitelist of nonzero Doob weights.
        min_distance: Lower bound on nonzero Doob weights.
        type_counts: Codes per group type.
        inequivalent: Whether the codes must be pairwise inequivalent.
    """

    name: str
    shape: Tuple[int, int, int]
    size: Optional[int] = None
    type: Optional[Tuple[int, int]] = None
    count: int
    file: Optional[str] = None
    weights: Optional[Tuple[int, ...]] = None
    min_distance: Optional[int] = None
    type_counts: Optional[List[TypeCount]] = None
    inequivalent: bool = True

    @validator("count")
    def _count_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("count must be nonnegative")
        return value

    @root_validator(skip_on_failure=True)
    def _file_matches_count(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        if (values["file"] is None) != (values["count"] == 0):
            raise ValueError(
                f"Bucket `{values['name']}` needs a file exactly when its "
                f"count is positive."
            )
        type_counts = values.get("type_counts")
        if type_counts and sum(t.count for t in type_counts) != values["count"]:
            raise ValueError(
                f"Type counts of `{values['name']}` do not add up to its count."
            )
        return values

    @property
    def ambient(self) -> Shape:
        return Shape.of(*self.shape)

    class Config:
        """Pydantic configuration class."""

        frozen = True
        extra = "forbid"


class CorpusManifest(BaseModel):
    """All buckets of a corpus and the directory their files live in."""

    version: int = 1
    buckets: List[CorpusBucket]
    root: Path = DATA_DIRECTORY

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "CorpusManifest":
        """Reads a manifest; by default the one shipped with the package.

        Raises:
            FileNotFoundError: if the file does not exist.
            pydantic.ValidationError: on a malformed manifest.
        """
        path = Path(path) if path is not None else (
            DATA_DIRECTORY / CORPUS_MANIFEST_NAME
        )
        values = yaml_utils.read_yaml(path)
        if not isinstance(values, dict):
            raise ValueError(f"{path} does not contain a mapping.")
        return cls(root=path.parent, **values)

    def records(self, bucket: CorpusBucket) -> List[CodeRecord]:
        """Codes listed for a bucket, as written."""
        if bucket.file is None:
            return []
        return read_records(self.root / bucket.file)

    def bucket(self, name: str) -> CorpusBucket:
        """The bucket of a name.

        Raises:
            KeyError: if there is none.
        """
        for bucket in self.buckets:
            if bucket.name == name:
                return bucket
        raise KeyError(name)

    def select(
        self,
        shape: Optional[Shape] = None,
        size: Optional[int] = None,
        group_type: Optional[Tuple[int, int]] = None,
    ) -> List[CorpusBucket]:
        """Buckets matching every given criterion."""
        return [
            bucket
            for bucket in self.buckets
            if (shape is None or bucket.ambient == shape)
            and (size is None or bucket.size == size)
            and (group_type is None or bucket.type == tuple(group_type))
        ]


def data_path(relative: str) -> Path:
    """Path of a file of the shipped data directory."""
    return DATA_DIRECTORY / relative


__all__ = [
    "CorpusBucket",
    "CorpusManifest",
    "DATA_DIRECTORY",
    "TypeCount",
    "data_path",
]
