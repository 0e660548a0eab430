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
"""
The ``config`` module holds the run configuration of searches and
enumerations. ``Budgets`` caps every potentially exponential operation
(codeword enumeration, breadth-first search over an ambient, coset graphs,
canonical-form search) and ``SearchConfig`` describes one classification
campaign. Both are pydantic models and can be read from a YAML file.
"""
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.config.search_config import SearchConfig

__all__ = ["Budgets", "DEFAULT_BUDGETS", "SearchConfig"]
