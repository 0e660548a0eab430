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
from typing import Any, Dict, List, NoReturn, Sequence, Union

import click
from rich import box, table
from rich.text import Text

from doobcodes.campaigns.tables import ClassTable, emit_tables
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.console import console
from doobcodes.constants import EXIT_BUDGET, EXIT_VERIFICATION_FAILED
from doobcodes.corpus.code_format import read_codes, write_codes
from doobcodes.exceptions import CodeFormatError
from doobcodes.logger import get_logger
from doobcodes.utils import yaml_utils

logger = get_logger(__name__)


class VerificationFailed(click.ClickException):
    """A check reported violations."""

    exit_code = EXIT_VERIFICATION_FAILED


class BudgetExhausted(click.ClickException):
    """An operation needed more than a configured budget."""

    exit_code = EXIT_BUDGET


def title(text: str) -> None:
    """Echo a title formatted string on the CLI.

    Args:
      text: Input text string.
    """
    console.print(text.upper(), style="title")


def declare(text: Union[str, Text]) -> None:
    """Echo a declaration on the CLI.

    Args:
      text: Input text string.
    """
    console.print(text, style="info")


def success(text: str) -> None:
    """Echo a success message on the CLI."""
    console.print(text, style="success")


def warning(text: str) -> None:
    """Echo a warning string on the CLI.

    Args:
      text: Input text string.
    """
    console.print(text, style="warning")


def error(text: str) -> None:
    """Echo an error string on the CLI.

    Args:
      text: Input text string.

    Raises:
        click.ClickException: when called.
    """
    raise click.ClickException(message=click.style(text, fg="red", bold=True))


def fail_verification(text: str) -> NoReturn:
    """Reports a failed check and exits with the verification exit code.

    Raises:
        VerificationFailed: when called.
    """
    raise VerificationFailed(message=click.style(text, fg="red", bold=True))


def print_table(obj: List[Dict[str, Any]], csv: bool = False) -> None:
    """Prints the list of dicts in a table format. Each item in that list
    represents a line in the table, the keys of the first dict are the
    headers.

    Args:
      obj: A List containing dictionaries.
      csv: Write comma-separated lines instead.
    """
    keys = list({key: None for dict_ in obj for key in dict_})
    if csv:
        click.echo(",".join(key.upper() for key in keys))
        for dict_ in obj:
            click.echo(",".join(str(dict_.get(key, "")) for key in keys))
        return
    rich_table = table.Table(
        *(key.upper() for key in keys), box=box.HEAVY_EDGE
    )
    for dict_ in obj:
        rich_table.add_row(*(str(dict_.get(key, "")) for key in keys))
    if len(rich_table.columns) > 1:
        rich_table.columns[0].justify = "center"
    console.print(rich_table)


def print_class_table(class_table: ClassTable, csv: bool = False) -> None:
    """Prints a grid of class counts, `≥` marking lower bounds."""
    if csv:
        click.echo(emit_tables(class_table, csv=True))
    else:
        console.print(emit_tables(class_table), highlight=False)


def load_code(path: str) -> AdditiveCode:
    """Reads the single code of a file.

    Raises:
        click.ClickException: if the file holds no code or several.
    """
    try:
        codes = read_codes(path)
    except CodeFormatError as exception:
        raise click.ClickException(f"{path}: {exception}") from exception
    if len(codes) != 1:
        raise click.ClickException(
            f"{path} holds {len(codes)} codes, expected exactly one."
        )
    return codes[0]


def write_results(
    directory: str,
    codes: Dict[str, Sequence[AdditiveCode]],
    summary: Dict[str, Any],
) -> None:
    """Writes representatives as code files plus `summary.yaml`.

    Args:
        directory: Output directory, created if needed.
        codes: File stem to the codes written to `<stem>.codes`.
        summary: `key: value` pairs of the summary.
    """
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    for stem, group in codes.items():
        labels = [f"{stem} no {number}" for number in range(1, len(group) + 1)]
        write_codes(root / f"{stem}.codes", group, labels)
    yaml_utils.write_yaml(root / "summary.yaml", summary)
    logger.info("Wrote %d code files to `%s`.", len(codes), root)
