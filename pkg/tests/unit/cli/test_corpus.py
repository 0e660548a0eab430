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
from doobcodes.cli.cli import cli
from doobcodes.constants import EXIT_VERIFICATION_FAILED
from doobcodes.corpus.code_format import write_codes
from doobcodes.utils import yaml_utils


def test_verify_selected_buckets(runner) -> None:
    """Checks a selection of the shipped corpus"""
    result = runner.invoke(
        cli, ["--csv", "verify-corpus", "--select", "B1-B6"]
    )
    assert result.exit_code == 0
    assert "B1-B6,6/6,ok" in result.output


def test_verify_reports_violations(runner, tmp_path, table_codes) -> None:
    """Checks that a wrong count exits with the verification code"""
    write_codes(tmp_path / "codes.codes", [table_codes["B1"]])
    manifest = tmp_path / "manifest.yaml"
    yaml_utils.write_yaml(
        manifest,
        {
            "buckets": [
                {
                    "name": "wrong count",
                    "shape": [4, 1, 0],
                    "count": 2,
                    "file": "codes.codes",
                }
            ]
        },
    )
    result = runner.invoke(cli, ["--csv", "verify-corpus", str(manifest)])
    assert result.exit_code == EXIT_VERIFICATION_FAILED
    assert "wrong count,1/2,FAILED" in result.output
