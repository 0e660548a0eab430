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
"""CLI command checking the shipped code corpus."""
from typing import Optional

import click

from doobcodes.cli import utils as cli_utils
from doobcodes.cli.cli import RunSettings, cli
from doobcodes.corpus.manifest import CorpusManifest
from doobcodes.corpus.verification import verify_corpus


@cli.command("verify-corpus")
@click.argument(
    "manifest_file",
    required=False,
    type=click.Path(exists=True, dir_okay=False),
)
@click.option("--strict", is_flag=True, help="Stop at the first violation.")
@click.option(
    "--select",
    "pattern",
    default=None,
    help="Only check buckets whose name contains this text.",
)
@click.pass_obj
def verify_corpus_command(
    settings: RunSettings,
    manifest_file: Optional[str],
    strict: bool,
    pattern: Optional[str],
) -> None:
    """Checks every bucket of a corpus manifest, by default the shipped
    one; exits 1 on any violation."""
    manifest = CorpusManifest.load(manifest_file)
    report = verify_corpus(
        manifest,
        strict=strict,
        budgets=settings.budgets,
        select=None if pattern is None else lambda b: pattern in b.name,
    )
    cli_utils.print_table(
        [
            {
                "bucket": bucket.name,
                "codes": f"{bucket.found}/{bucket.expected}",
                "status": "ok" if bucket.ok else "FAILED",
            }
            for bucket in report.buckets
        ],
        settings.csv,
    )
    for violation in report.violations:
        cli_utils.warning(violation)
    if not report.ok:
        cli_utils.fail_verification(
            f"{len(report.violations)} violations in the corpus."
        )
    cli_utils.success(f"All {len(report.buckets)} buckets verified.")
