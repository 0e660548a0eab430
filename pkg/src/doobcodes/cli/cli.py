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
from typing import Any, Dict, Optional, Tuple

import click
from pydantic import BaseModel

from doobcodes import __version__
from doobcodes.cli.utils import BudgetExhausted, VerificationFailed
from doobcodes.config.budgets import DEFAULT_BUDGETS, Budgets
from doobcodes.config.search_config import SearchConfig
from doobcodes.constants import DEFAULT_THREADS
from doobcodes.enums import SeedOrder
from doobcodes.exceptions import (
    BudgetExceededError,
    CorpusVerificationError,
    DoobCodesBaseException,
)
from doobcodes.logger import set_root_verbosity
from doobcodes.utils import yaml_utils


class RunSettings(BaseModel):
    """Global options shared by all subcommands.

    Attributes:
        budget_overrides: Limits given by `--budget NAME=N`.
        threads: Worker threads given by `--threads`.
        seed_order: Expansion order given by `--seed-order`.
        config_path: Campaign configuration file given by `--config`.
        csv: Whether tables are written as CSV.
    """

    budget_overrides: Dict[str, int] = {}
    threads: Optional[int] = None
    seed_order: Optional[SeedOrder] = None
    config_path: Optional[str] = None
    csv: bool = False

    @property
    def budgets(self) -> Budgets:
        return DEFAULT_BUDGETS.with_overrides(self.budget_overrides)

    @property
    def thread_count(self) -> int:
        return self.threads if self.threads is not None else DEFAULT_THREADS

    def search_config(self, **values: Any) -> SearchConfig:
        """A campaign configuration: the `--config` file if given, then
        `values`, then the global options, later ones taking precedence."""
        values = {
            key: value for key, value in values.items() if value is not None
        }
        if self.config_path is not None:
            config = SearchConfig.from_yaml(self.config_path, values)
        else:
            config = SearchConfig(**values)
        updates: Dict[str, Any] = {
            "budgets": config.budgets.with_overrides(self.budget_overrides)
        }
        if self.threads is not None:
            updates["threads"] = self.threads
        if self.seed_order is not None:
            updates["seed_order"] = self.seed_order
        return config.copy(update=updates)


def _parse_budgets(
    ctx: click.Context, param: click.Parameter, value: Tuple[str, ...]
) -> Dict[str, int]:
    overrides: Dict[str, int] = {}
    for item in value:
        name, _, amount = item.partition("=")
        try:
            overrides[name.strip()] = int(amount)
        except ValueError:
            raise click.BadParameter(
                f"`{item}` is not of the form NAME=N.", ctx, param
            ) from None
    try:
        DEFAULT_BUDGETS.with_overrides(overrides)
    except ValueError as exception:
        raise click.BadParameter(str(exception), ctx, param) from None
    return overrides


def _check_config(
    ctx: click.Context, param: click.Parameter, value: Optional[str]
) -> Optional[str]:
    if value is not None and not yaml_utils.is_yaml(value):
        raise click.BadParameter(f"{value} is not a YAML file.", ctx, param)
    return value


class DoobCodesGroup(click.Group):
    """Command group mapping library errors to exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except BudgetExceededError as exception:
            raise BudgetExhausted(str(exception)) from exception
        except CorpusVerificationError as exception:
            raise VerificationFailed(str(exception)) from exception
        except DoobCodesBaseException as exception:
            raise click.ClickException(str(exception)) from exception


@click.group(cls=DoobCodesGroup)
@click.version_option(__version__, "--version", "-v")
@click.option(
    "--threads",
    type=click.IntRange(min=0),
    default=None,
    help="Worker threads; 0 means one per CPU.",
)
@click.option(
    "--budget",
    "budgets",
    multiple=True,
    callback=_parse_budgets,
    metavar="NAME=N",
    help="Raise or lower a budget, e.g. `--budget ambient=4194304`.",
)
@click.option(
    "--seed-order",
    type=click.Choice([order.value for order in SeedOrder]),
    default=None,
    help="Order in which classes are expanded.",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    callback=_check_config,
    default=None,
    help="YAML file with campaign settings.",
)
@click.option("--csv", is_flag=True, help="Write tables as CSV.")
@click.pass_context
def cli(
    ctx: click.Context,
    threads: Optional[int],
    budgets: Dict[str, int],
    seed_order: Optional[str],
    config_path: Optional[str],
    csv: bool,
) -> None:
    """Additive codes in Doob graphs and GF(4)^n."""
    set_root_verbosity()
    ctx.obj = RunSettings(
        budget_overrides=budgets,
        threads=threads,
        seed_order=SeedOrder(seed_order) if seed_order else None,
        config_path=config_path,
        csv=csv,
    )


if __name__ == "__main__":
    cli()
