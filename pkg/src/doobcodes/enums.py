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

import logging
from enum import Enum

from doobcodes.utils.enum_utils import StrEnum


class LoggingLevels(Enum):
    """Enum for logging levels."""

    NOTSET = logging.NOTSET
    ERROR = logging.ERROR
    WARN = logging.WARN
    INFO = logging.INFO
    DEBUG = logging.DEBUG
    CRITICAL = logging.CRITICAL


class CoordKind(StrEnum):
    """The three coordinate alphabets of a Doob-graph ambient.

    `QUAD` is the group Z4 x Z4 (a Shrikhande factor), `BI` the group
    Z2 x Z2 (a K4 factor, also GF(4) under addition) and `SINGLE` the group
    Z4 (a K4 factor with cyclic structure).
    """

    QUAD = "quad"
    BI = "bi"
    SINGLE = "single"

    @property
    def components(self) -> int:
        """Number of Z4 components a symbol of this kind occupies."""
        return 1 if self == CoordKind.SINGLE else 2

    @property
    def radix(self) -> int:
        """Number of symbols of this kind."""
        return 16 if self == CoordKind.QUAD else 4


class Metric(StrEnum):
    """Weight functions a code can be measured with."""

    HAMMING = "hamming"
    DOOB = "doob"


class InnerProductForm(StrEnum):
    """Bilinear forms used to define duals."""

    TRACE_HERMITIAN = "th"
    HERMITIAN = "hermitian"
    DOOB = "doob"


class SeedOrder(StrEnum):
    """Order in which stored classes are expanded by a campaign."""

    CANONICAL = "canonical"
    DISCOVERY = "discovery"
