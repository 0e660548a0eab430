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
"""CLI commands on single codes: weights, duals, equivalence."""
from typing import Optional

import click

from doobcodes.cli import utils as cli_utils
from doobcodes.cli.cli import RunSettings, cli
from doobcodes.codes.duality import dual
from doobcodes.codes.weights import (
    WeightDistribution,
    macwilliams,
    metric_diameter,
    weight_distribution,
)
from doobcodes.corpus.code_format import render_code, write_codes
from doobcodes.enums import InnerProductForm, Metric
from doobcodes.equivalence.canonical import equivalent
from doobcodes.exceptions import InconsistentDistributionError

METRIC_OPTION = click.option(
    "--metric",
    type=click.Choice([metric.value for metric in Metric]),
    default=Metric.DOOB.value,
    show_default=True,
    help="Weight function.",
)


@cli.command("weights")
@click.argument("code_file", type=click.Path(exists=True, dir_okay=False))
@METRIC_OPTION
@click.pass_obj
def weights(settings: RunSettings, code_file: str, metric: str) -> None:
    """Prints the weight distribution of a code as `w:count` pairs."""
    code = cli_utils.load_code(code_file)
    click.echo(str(weight_distribution(code, Metric(metric), settings.budgets)))


@cli.command("dual")
@click.argument("code_file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--form",
    type=click.Choice([form.value for form in InnerProductForm]),
    default=InnerProductForm.DOOB.value,
    show_default=True,
    help="Inner product defining the dual.",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write the dual to this file instead of printing it.",
)
def dual_code(code_file: str, form: str, out: Optional[str]) -> None:
    """Computes the dual of a code."""
    result = dual(cli_utils.load_code(code_file), InnerProductForm(form))
    if out is None:
        click.echo(render_code(result), nl=False)
    else:
        write_codes(out, [result], [f"{form} dual of {code_file}"])
        cli_utils.declare(f"Wrote a dual of size {result.size} to {out}.")


@cli.command("macwilliams")
@click.argument(
    "code_file", required=False, type=click.Path(exists=True, dir_okay=False)
)
@click.option(
    "--wd",
    "distribution",
    default=None,
    help="Weight distribution as `w:count` pairs, e.g. `0:1,6:36,8:27`.",
)
@click.option("-n", "diameter", type=int, default=None, help="Diameter.")
@click.option("--size", type=int, default=None, help="Code size.")
@METRIC_OPTION
@click.pass_obj
def macwilliams_transform(
    settings: RunSettings,
    code_file: Optional[str],
    distribution: Optional[str],
    diameter: Optional[int],
    size: Optional[int],
    metric: str,
) -> None:
    """Prints the MacWilliams transform of a weight distribution, given
    directly or as the distribution of a code."""
    if code_file is not None:
        code = cli_utils.load_code(code_file)
        diameter = metric_diameter(code, Metric(metric))
        size = code.size
        source = weight_distribution(code, Metric(metric), settings.budgets)
    else:
        if distribution is None or diameter is None or size is None:
            raise click.UsageError(
                "Give a code file, or `--wd`, `-n` and `--size`."
            )
        try:
            source = WeightDistribution.parse(distribution, diameter)
        except ValueError as exception:
            raise click.BadParameter(str(exception)) from None
    try:
        result = macwilliams(source, diameter, size)
    except InconsistentDistributionError as exception:
        cli_utils.fail_verification(str(exception))
    click.echo(str(result))


@cli.command("equiv")
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def equiv(settings: RunSettings, first: str, second: str) -> None:
    """Tells whether two codes are equivalent."""
    a = cli_utils.load_code(first)
    b = cli_utils.load_code(second)
    if a.shape != b.shape:
        click.echo("inequivalent")
        return
    found = equivalent(a, b, settings.budgets)
    click.echo("equivalent" if found else "inequivalent")
