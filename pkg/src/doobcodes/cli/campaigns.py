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
"""CLI commands running the classification campaigns."""
from typing import Any, Dict, List, Optional, Tuple

import click

from doobcodes.alphabet.shape import Shape
from doobcodes.alphabet.vectors import MixedVector
from doobcodes.campaigns.dodecacode import (
    PUNCTURED_ARRAY,
    dodecacode_seed_code,
    is_dodecacode,
    puncture_dodecacode,
    punctured_intersection_array,
    search_dodecacode,
    verify_unique_completion,
)
from doobcodes.campaigns.hamming import classify_hamming
from doobcodes.campaigns.lengthening import (
    LENGTHENED_SHAPE,
    lengthen_diameter11,
)
from doobcodes.campaigns.lifting import (
    LIFTABLE_THRESHOLD,
    lift_diameter12,
    split_by_dimension,
    verify_lifted_markup,
)
from doobcodes.campaigns.two_weight import (
    DIAMETER9_AMBIENTS,
    BucketKey,
    classify_weight_constrained,
)
from doobcodes.cli import utils as cli_utils
from doobcodes.cli.cli import RunSettings, cli
from doobcodes.codes.additive_code import AdditiveCode
from doobcodes.codes.duality import trace_hermitian_dual
from doobcodes.codes.operations import even_subcode
from doobcodes.codes.weights import codeword_weights, min_distance
from doobcodes.corpus.code_format import CodeRecord, read_records
from doobcodes.enums import Metric
from doobcodes.exceptions import PreconditionError


def _integers(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(item) for item in text.replace(" ", "").split(","))
    except ValueError:
        raise click.BadParameter(
            f"`{text}` is not a comma-separated list of integers."
        ) from None


def _type_name(group_type: Tuple[int, int]) -> str:
    return f"Z4^{group_type[0]}Z2^{group_type[1]}"


@cli.command("classify-hamming")
@click.option("-d", "distance", type=click.IntRange(min=1), required=True)
@click.option(
    "-n",
    "max_length",
    type=click.IntRange(min=1),
    default=None,
    help="Largest length; the target length by default.",
)
@click.option(
    "--target",
    default=None,
    metavar="N,K",
    help="Only extend codes that can still reach `(N, 2^K, d)`.",
)
@click.option("--maximal", is_flag=True, help="Also list maximal classes.")
@click.option(
    "--out",
    type=click.Path(file_okay=False, writable=True),
    default=None,
    help="Write representatives and a summary to this directory.",
)
@click.pass_obj
def classify_hamming_command(
    settings: RunSettings,
    distance: int,
    max_length: Optional[int],
    target: Optional[str],
    maximal: bool,
    out: Optional[str],
) -> None:
    """Counts the classes of additive `(n, 2^k, >=d)_4` codes."""
    parsed = _integers(target)
    if parsed is not None and len(parsed) != 2:
        raise click.BadParameter("The target is `N,K`.")
    config = settings.search_config(min_distance=distance, target=parsed)
    if max_length is None and config.target is None:
        raise click.UsageError("Give `-n` or `--target`.")
    result = classify_hamming(config, max_length)
    cli_utils.print_class_table(result.table, settings.csv)
    if maximal:
        cli_utils.print_table(
            [
                {"n": n, "k": k, "maximal": len(codes)}
                for (n, k), codes in sorted(result.maximal.items())
                if codes
            ],
            settings.csv,
        )
    if out is not None:
        cli_utils.write_results(
            out,
            {
                f"n{n}_k{k}": codes
                for (n, k), codes in sorted(result.representatives.items())
                if codes
            },
            dict(result.table.summary_items()),
        )


def _bucket_rows(
    shape: Shape, buckets: Dict[BucketKey, List[AdditiveCode]]
) -> List[Dict[str, Any]]:
    return [
        {
            "ambient": str(shape),
            "size": size,
            "type": _type_name(group_type),
            "classes": len(codes),
        }
        for (size, group_type), codes in buckets.items()
    ]


@cli.command("classify-doob")
@click.option("-m", "m", type=click.IntRange(min=0), default=None)
@click.option("--nprime", type=click.IntRange(min=0), default=None)
@click.option("--ndouble", type=click.IntRange(min=0), default=None)
@click.option(
    "--diameter9",
    is_flag=True,
    help="Run over all diameter-9 ambients with 2m + n'' >= 6 and D(0,9+0).",
)
@click.option("--weights", default="6,8", show_default=True)
@click.option("--max-size", type=click.IntRange(min=1), default=64)
@click.option(
    "--out",
    type=click.Path(file_okay=False, writable=True),
    default=None,
    help="Write representatives and a summary to this directory.",
)
@click.pass_obj
def classify_doob_command(
    settings: RunSettings,
    m: Optional[int],
    nprime: Optional[int],
    ndouble: Optional[int],
    diameter9: bool,
    weights: str,
    max_size: int,
    out: Optional[str],
) -> None:
    """Classifies the codes of Doob ambients with whitelisted weights."""
    if diameter9:
        shapes = list(DIAMETER9_AMBIENTS)
    elif m is None and nprime is None and ndouble is None:
        raise click.UsageError("Give `-m/--nprime/--ndouble` or `--diameter9`.")
    else:
        shapes = [Shape.of(m or 0, nprime or 0, ndouble or 0)]
    allowed = _integers(weights) or ()
    rows: List[Dict[str, Any]] = []
    found: Dict[str, List[AdditiveCode]] = {}
    summary: Dict[str, Any] = {"weights": list(allowed)}
    for shape in shapes:
        config = settings.search_config(
            min_distance=min(allowed),
            weights=allowed,
            max_size=max_size,
            shape=shape,
        )
        buckets = classify_weight_constrained(config)
        rows += _bucket_rows(shape, buckets)
        for (size, group_type), codes in buckets.items():
            stem = (
                f"d{shape.m}_{shape.n_prime}_{shape.n_double_prime}_s{size}_"
                f"t{group_type[0]}_{group_type[1]}"
            )
            found[stem] = codes
            summary[f"{shape} size {size} {_type_name(group_type)}"] = len(
                codes
            )
    cli_utils.print_table(rows, settings.csv)
    if out is not None:
        cli_utils.write_results(out, found, summary)


@cli.command("lengthen11")
@click.option(
    "--out",
    type=click.Path(file_okay=False, writable=True),
    default=None,
    help="Write representatives and a summary to this directory.",
)
@click.pass_obj
def lengthen11(settings: RunSettings, out: Optional[str]) -> None:
    """Extends the six size-64 two-weight codes of D(4,1+0) in D(5,1+0)
    with weights 6, 8 and 10."""
    budgets = settings.budgets
    if "ambient" not in settings.budget_overrides:
        budgets = budgets.with_overrides(
            {"ambient": LENGTHENED_SHAPE.ambient_order}
        )
    result = lengthen_diameter11(
        budgets=budgets, threads=settings.thread_count
    )
    rows = []
    for size, codes in result.classes.items():
        types = result.type_counts(size)
        rows.append(
            {
                "size": size,
                "classes": len(codes),
                "types": " ".join(
                    f"{_type_name(t)}:{c}" for t, c in sorted(types.items())
                ),
                "distributions": " | ".join(
                    str(wd) for wd in result.distributions[size]
                ),
            }
        )
    cli_utils.print_table(rows, settings.csv)
    if result.levels and not result.levels[-1].classes:
        cli_utils.declare(
            f"No code of size {2 ** result.levels[-1].dimension} extends "
            f"these (search restricted to codes with a size-64 shortening)."
        )
    if out is not None:
        cli_utils.write_results(
            out,
            {f"size{size}": codes for size, codes in result.classes.items()},
            {
                f"size {size}": len(codes)
                for size, codes in result.classes.items()
            },
        )


@cli.command("lift12")
@click.option(
    "--codes",
    "code_files",
    multiple=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Code files with the (6, 2^6, 3)_4 and (6, 2^7, 3)_4 classes, "
    "e.g. written by `classify-hamming --out`; the shipped classes by "
    "default.",
)
@click.option(
    "--markup/--no-markup",
    default=True,
    help="Also check the shipped lifts of the dimension-7 codes.",
)
@click.pass_obj
def lift12(
    settings: RunSettings, code_files: Tuple[str, ...], markup: bool
) -> None:
    """Lifting tests of the (6, 2^6, 3)_4 and (6, 2^7, 3)_4 classes in
    D(6,0+0); exits 1 unless they exclude a code of diameter 12."""
    records6: Optional[List[CodeRecord]] = None
    records7: Optional[List[CodeRecord]] = None
    if code_files:
        records = [
            record for path in code_files for record in read_records(path)
        ]
        try:
            records6, records7 = split_by_dimension(records)
        except PreconditionError as e:
            raise click.UsageError(str(e)) from None
    report = lift_diameter12(
        records6,
        records7,
        budgets=settings.budgets,
        threads=settings.thread_count,
    )
    cli_utils.print_table(
        [
            {
                "code": index + 1,
                "distance": report.hamming_distances[index],
                "stages": ",".join(map(str, report.joint_stages[index])),
            }
            for index in report.all_rows_liftable
        ],
        settings.csv,
    )
    click.echo(
        "liftable codewords: "
        + " ".join(
            f"{count}x{times}"
            for count, times in report.liftable_count_histogram.items()
        )
    )
    if markup:
        types = verify_lifted_markup(budgets=settings.budgets)
        click.echo(
            "lifted types: "
            + " ".join(f"{_type_name(t)}:{c}" for t, c in sorted(types.items()))
        )
    if report.jointly_liftable or not report.dimension7_excluded:
        cli_utils.fail_verification(
            f"Some code lifts jointly or has {LIFTABLE_THRESHOLD} liftable "
            f"codewords."
        )
    cli_utils.success("No additive code of diameter 12 arises by lifting.")


@cli.command("dodecacode")
@click.option(
    "--seed/--search",
    default=False,
    help="Use the known generator instead of searching.",
)
@click.option(
    "--completely-regular",
    is_flag=True,
    help="Also compute the intersection array of the punctured code over "
    "all 4^11 vertices.",
)
@click.pass_obj
def dodecacode(
    settings: RunSettings, seed: bool, completely_regular: bool
) -> None:
    """Finds the dodecacode and checks its puncturing."""
    budgets = settings.budgets
    code = dodecacode_seed_code() if seed else search_dodecacode(budgets)
    if code is None:
        cli_utils.fail_verification("No dodecacode found within the budgets.")
    if not is_dodecacode(code, budgets):
        cli_utils.fail_verification("The code found is not a dodecacode.")
    click.echo(f"dodecacode: size {code.size}, distance 6, cyclic, self-dual")
    report = puncture_dodecacode(code, budgets=budgets)
    click.echo(
        f"punctured: distance {report.distance}, "
        f"F4-linear {str(report.f4_linear).lower()}, "
        f"dual {report.dual_distribution}"
    )
    if not report.as_expected:
        cli_utils.fail_verification("The punctured code is not as expected.")
    even = trace_hermitian_dual(report.punctured)
    words = report.punctured.codewords(budgets)
    weights = codeword_weights(report.punctured, Metric.HAMMING, budgets)
    word = MixedVector(even.shape, words[weights == 5][0])
    completion = verify_unique_completion(even, word, budgets)
    completed_distance = min_distance(completion, Metric.HAMMING, budgets)
    click.echo(
        f"completion: size {completion.size}, distance {completed_distance}, "
        f"even part is the dual: {even_subcode(completion, budgets) == even}"
    )
    if completely_regular:
        array = punctured_intersection_array(report.punctured)
        click.echo(f"intersection array: {array}")
        if array != PUNCTURED_ARRAY:
            cli_utils.fail_verification("Unexpected intersection array.")
    if completed_distance != 5:
        cli_utils.fail_verification("The completion does not have distance 5.")
