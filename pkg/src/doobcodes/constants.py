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

import os


def handle_bool_env_var(var: str, default: bool = False) -> bool:
    """Converts normal env var to boolean"""
    value = os.getenv(var)
    if value in ["1", "y", "yes", "True", "true"]:
        return True
    return default


def handle_int_env_var(var: str, default: int = 0) -> int:
    """Converts normal env var to int"""
    value = os.getenv(var, "")
    try:
        return int(value)
    except (ValueError, TypeError):
        return default


# Global constants
APP_NAME = "doobcodes"

# Environment variables
ENV_DOOBCODES_DEBUG = "DOOBCODES_DEBUG"
ENV_DOOBCODES_LOGGING_VERBOSITY = "DOOBCODES_LOGGING_VERBOSITY"
ENV_DOOBCODES_THREADS = "DOOBCODES_THREADS"

# Logging variables
IS_DEBUG_ENV: bool = handle_bool_env_var(ENV_DOOBCODES_DEBUG, default=False)

DOOBCODES_LOGGING_VERBOSITY: str = "INFO"

if IS_DEBUG_ENV:
    DOOBCODES_LOGGING_VERBOSITY = os.getenv(
        ENV_DOOBCODES_LOGGING_VERBOSITY, default="DEBUG"
    ).upper()
else:
    DOOBCODES_LOGGING_VERBOSITY = os.getenv(
        ENV_DOOBCODES_LOGGING_VERBOSITY, default="INFO"
    ).upper()

# Worker threads for campaigns; 0 means "one per CPU"
DEFAULT_THREADS: int = max(0, handle_int_env_var(ENV_DOOBCODES_THREADS, 0))

# Budgets
DEFAULT_SPAN_BUDGET: int = 2**20
DEFAULT_AMBIENT_BUDGET: int = 4**10
DEFAULT_COSET_INDEX_BUDGET: int = 2**16
DEFAULT_GRAPH_ORDER_BUDGET: int = 256
DEFAULT_ORBIT_PAIR_BUDGET: int = 10**7
DEFAULT_CANONICAL_STATE_BUDGET: int = 2 * 10**6

# Exit codes of the command line interface
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# Corpus
CORPUS_MANIFEST_NAME = "manifest.yaml"
CODE_FILE_SUFFIX = ".codes"
