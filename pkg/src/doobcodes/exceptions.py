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
"""doobcodes specific exception definitions"""
from typing import Optional


class DoobCodesBaseException(Exception):
    """Base exception for all doobcodes exceptions."""

    def __init__(
        self,
        message: Optional[str] = None,
        url: Optional[str] = None,
    ):
        """BaseException used to format messages displayed to the user.

        Args:
            message: Message with details of exception. This message
                     will be appended with another message directing user to
                     `url` for more information. If `None`, then default
                     Exception behavior is used.
            url: URL to point to in exception message. If `None`, then no url
                 is appended.
        """
        if message:
            if url:
                message += f" For more information, visit {url}."
        super().__init__(message)


class ShapeMismatchError(DoobCodesBaseException, ValueError):
    """Raised when two operands live in different ambients or a vector has
    the wrong length for its shape."""


class IncompatibleFormError(DoobCodesBaseException, ValueError):
    """Raised when an inner product or a GF(4)-only operation is applied to a
    shape it is not defined on."""


class PreconditionError(DoobCodesBaseException, ValueError):
    """Raised when the inputs of an operation violate its preconditions."""


class InconsistentDistributionError(DoobCodesBaseException, ValueError):
    """Raised when a weight distribution cannot belong to a code, e.g. when
    its MacWilliams transform is not a nonnegative integer vector."""


class BudgetExceededError(DoobCodesBaseException):
    """Raised when an enumeration, a breadth-first search or a search stage
    would exceed its configured budget."""

    def __init__(self, budget: str, requested: int, limit: int):
        """
        Initializes a BudgetExceededError.

        Args:
            budget: Name of the budget (`span`, `ambient`, ...).
            requested: Amount the operation needed.
            limit: Configured limit.
        """
        self.budget = budget
        self.requested = requested
        self.limit = limit
        super().__init__(
            f"The `{budget}` budget is exceeded: {requested} requested, "
            f"limit is {limit}. Raise it with `--budget {budget}=N`."
        )


class CodeFormatError(DoobCodesBaseException, ValueError):
    """Raised when a code file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CorpusVerificationError(DoobCodesBaseException):
    """Raised by strict corpus verification on the first violation."""
