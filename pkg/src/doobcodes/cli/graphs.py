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
"""CLI commands on coset graphs and distance partitions."""
from typing import List, Optional, Tuple

import click

from doobcodes.cli import utils as cli_utils
from doobcodes.cli.cli import RunSettings, cli
from doobcodes.cli.codes import METRIC_OPTION
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.ambient import intersection_array
from doobcodes.codes.duality import doob_dual
from doobcodes.codes.weights import IntersectionArray
from doobcodes.corpus.code_format import read_records
from doobcodes.enums import Metric
from doobcodes.graphs.canonical import classify_isomorphism
from doobcodes.graphs.coset_graph import coset_graph
from doobcodes.graphs.graph import Graph, srg_params

OF_DUAL_OPTION = click.option(
    "--of-dual",
    is_flag=True,
    help="Use the Doob dual of the code instead of the code.",
)


def _subject(code_file: str, of_dual: bool) -> AdditiveCode:
    code = cli_utils.load_code(code_file)
    return doob_dual(code) if of_dual else code


@cli.command("coset-graph")
@click.argument("code_file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--srg",
    is_flag=True,
    help="Check that the graph is strongly regular; exit 1 if it is not.",
)
@click.option(
    "--export",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write the graph as an adjacency list.",
)
@OF_DUAL_OPTION
@METRIC_OPTION
@click.pass_obj
def coset_graph_command(
    settings: RunSettings,
    code_file: str,
    srg: bool,
    export: Optional[str],
    of_dual: bool,
    metric: str,
) -> None:
    """Builds the coset graph of a code."""
    code = _subject(code_file, of_dual)
    graph = coset_graph(code, Metric(metric), settings.budgets)
    degrees = sorted(set(graph.degrees().tolist()))
    click.echo(
        f"vertices: {graph.order}, degrees: {','.join(map(str, degrees))}"
    )
    if export is not None:
        with open(export, "w", encoding="utf-8") as file:
            file.write(graph.to_adjacency_list())
        cli_utils.declare(f"Wrote the graph to {export}.")
    if srg:
        params = srg_params(graph)
        if params is None:
            cli_utils.fail_verification("The graph is not strongly regular.")
        click.echo(f"SRG{params}")


@cli.command("intersection-array")
@click.argument("code_file", type=click.Path(exists=True, dir_okay=False))
@OF_DUAL_OPTION
@METRIC_OPTION
@click.pass_obj
def intersection_array_command(
    settings: RunSettings, code_file: str, of_dual: bool, metric: str
) -> None:
    """Prints the intersection array of a completely regular code, found by
    breadth-first search over the whole ambient; exits 1 if the code is
    not completely regular."""
    code = _subject(code_file, of_dual)
    result = intersection_array(code, Metric(metric), settings.budgets)
    if not isinstance(result, IntersectionArray):
        cli_utils.fail_verification(str(result))
    click.echo(str(result))


@cli.command("graph-classes")
@click.argument(
    "code_files", nargs=-1, required=True, type=click.Path(exists=True)
)
@OF_DUAL_OPTION
@click.pass_obj
def graph_classes(
    settings: RunSettings, code_files: Tuple[str, ...], of_dual: bool
) -> None:
    """Groups the coset graphs of all codes in the files into isomorphism
    classes, one line per class."""
    labels: List[str] = []
    graphs: List[Graph] = []
    for code_file in code_files:
        for number, record in enumerate(read_records(code_file), start=1):
            code = doob_dual(record.code) if of_dual else record.code
            labels.append(record.label or f"{code_file}:{number}")
            graphs.append(coset_graph(code, budgets=settings.budgets))
    classes = classify_isomorphism(
        graphs, settings.thread_count, settings.budgets
    )
    for members in classes:
        click.echo(" ".join(labels[index] for index in members))
    cli_utils.declare(f"{len(classes)} classes among {len(graphs)} graphs.")
