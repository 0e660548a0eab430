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
import pytest

from doobcodes.campaigns.lengthening import LengtheningResult
from doobcodes.campaigns.lifting import LiftingReport
from doobcodes.cli.cli import cli
from doobcodes.constants import EXIT_USAGE, EXIT_VERIFICATION_FAILED
from doobcodes.corpus.code_format import read_codes
from doobcodes.corpus.manifest import data_path
from doobcodes.utils import yaml_utils


def _report(**changes) -> LiftingReport:
    values = dict(
        all_rows_liftable=[3],
        hamming_distances={3: 4},
        joint_stages={3: [12, 0]},
        jointly_liftable=[],
        liftable_counts=[7, 1, 1],
    )
    values.update(changes)
    return LiftingReport(**values)


def test_classify_hamming_table(runner) -> None:
    """Checks the CSV class table of short distance-3 codes"""
    result = runner.invoke(
        cli, ["--csv", "classify-hamming", "-d", "3", "-n", "4"]
    )
    assert result.exit_code == 0
    assert "n,0,1" in result.output
    assert "\n3,1,1" in result.output


def test_classify_hamming_writes_results(runner, tmp_path) -> None:
    """Checks the representatives and the summary written by `--out`"""
    out = tmp_path / "d3"
    result = runner.invoke(
        cli,
        [
            "classify-hamming",
            "-d",
            "3",
            "-n",
            "3",
            "--maximal",
            "--out",
            str(out),
        ],
    )
    assert result.exit_code == 0
    summary = yaml_utils.read_yaml(str(out / "summary.yaml"))
    assert summary["min_distance"] == "3"
    assert summary["N(3,0,3)"] == "1"
    (code,) = read_codes(out / "n3_k1.codes")
    assert code.size == 2


@pytest.mark.parametrize(
    "arguments",
    [
        ["-d", "3"],
        ["-d", "3", "--target", "5"],
        ["-d", "3", "--target", "5,x"],
        ["-d", "0", "-n", "4"],
    ],
)
def test_classify_hamming_usage_errors(runner, arguments) -> None:
    """Checks that a missing length or a malformed target is refused"""
    result = runner.invoke(cli, ["classify-hamming"] + arguments)
    assert result.exit_code == EXIT_USAGE


def test_classify_doob_small_ambient(runner, tmp_path) -> None:
    """Checks the bucket table of a small whitelist campaign"""
    out = tmp_path / "doob"
    result = runner.invoke(
        cli,
        [
            "--csv",
            "classify-doob",
            "--nprime",
            "2",
            "--weights",
            "2",
            "--out",
            str(out),
        ],
    )
    assert result.exit_code == 0
    assert "AMBIENT,SIZE,TYPE,CLASSES" in result.output
    assert "D(0,2+0),2,Z4^0Z2^1,1" in result.output
    assert "D(0,2+0),4,Z4^0Z2^2,1" in result.output
    summary = yaml_utils.read_yaml(str(out / "summary.yaml"))
    assert summary["weights"] == [2]
    assert summary["D(0,2+0) size 4 Z4^0Z2^2"] == 1
    assert (out / "d0_2_0_s4_t0_2.codes").exists()


def test_classify_doob_needs_an_ambient(runner) -> None:
    """Checks that some ambient must be chosen"""
    result = runner.invoke(cli, ["classify-doob"])
    assert result.exit_code == EXIT_USAGE


def test_classify_doob_diameter9_uses_every_ambient(runner, mocker) -> None:
    """Checks that `--diameter9` runs all 19 ambients"""
    classify = mocker.patch(
        "doobcodes.cli.campaigns.classify_weight_constrained",
        return_value={},
    )
    result = runner.invoke(cli, ["classify-doob", "--diameter9"])
    assert result.exit_code == 0
    assert classify.call_count == 19
    config = classify.call_args[0][0]
    assert config.weights == (6, 8)
    assert config.max_size == 64


def test_lengthen11_command(runner, mocker) -> None:
    """Checks the report when no class extends"""
    lengthen = mocker.patch(
        "doobcodes.cli.campaigns.lengthen_diameter11",
        return_value=LengtheningResult(levels=[], classes={}, distributions={}),
    )
    result = runner.invoke(cli, ["--threads", "3", "lengthen11"])
    assert result.exit_code == 0
    budgets = lengthen.call_args.kwargs["budgets"]
    assert budgets.ambient == 4**11
    assert lengthen.call_args.kwargs["threads"] == 3


@pytest.mark.slow
def test_lengthen11_finds_two_sizes(runner) -> None:
    """Checks the sizes and group types of the lengthened classes"""
    result = runner.invoke(cli, ["--csv", "lengthen11"])
    assert result.exit_code == 0
    assert "\n128,9,Z4^2Z2^3:2 Z4^3Z2^1:7," in result.output
    assert "\n256,8,Z4^2Z2^4:2 Z4^3Z2^2:6," in result.output
    assert "No code of size" in result.output


def test_lift12_command(runner, mocker) -> None:
    """Checks a lifting report that excludes diameter 12"""
    mocker.patch(
        "doobcodes.cli.campaigns.lift_diameter12", return_value=_report()
    )
    markup = mocker.patch(
        "doobcodes.cli.campaigns.verify_lifted_markup",
        return_value={(2, 5): 4, (1, 6): 10},
    )
    result = runner.invoke(cli, ["--csv", "lift12"])
    assert result.exit_code == 0
    assert "4,4,12,0" in result.output
    assert "liftable codewords: 7x1 1x2" in result.output
    assert "lifted types: Z4^1Z2^6:10 Z4^2Z2^5:4" in result.output
    markup.assert_called_once()


@pytest.mark.parametrize(
    "changes",
    [{"jointly_liftable": [3]}, {"liftable_counts": [31]}],
)
def test_lift12_fails_on_a_possible_code(runner, mocker, changes) -> None:
    """Checks that a joint lift or many liftable codewords fail"""
    mocker.patch(
        "doobcodes.cli.campaigns.lift_diameter12",
        return_value=_report(**changes),
    )
    result = runner.invoke(cli, ["lift12", "--no-markup"])
    assert result.exit_code == EXIT_VERIFICATION_FAILED


def test_lift12_reads_code_files(runner) -> None:
    """Checks a lifting run on the codes of a given file"""
    path = str(data_path("tables/liftable.codes"))
    result = runner.invoke(
        cli, ["--csv", "lift12", "--codes", path, "--no-markup"]
    )
    assert result.exit_code == 0
    assert "\n1,3," in result.output
    assert "\n2,4," in result.output
    assert "liftable codewords: \n" in result.output


@pytest.mark.parametrize(
    "text",
    ["gf4 6\n111111\n", "gf4 5\n11111\n"],
    ids=["dimension", "length"],
)
def test_lift12_refuses_other_codes(runner, tmp_path, text) -> None:
    """Checks that codes outside the lifted classes are refused"""
    path = tmp_path / "other.codes"
    path.write_text(text)
    result = runner.invoke(cli, ["lift12", "--codes", str(path)])
    assert result.exit_code == EXIT_USAGE


def test_dodecacode_command(runner) -> None:
    """Checks the known dodecacode and its puncturing"""
    result = runner.invoke(cli, ["dodecacode", "--seed"])
    assert result.exit_code == 0
    assert "dodecacode: size 4096" in result.output
    assert "punctured: distance 5, F4-linear false" in result.output
    assert "completion: size 2048, distance 5" in result.output
    assert "even part is the dual: True" in result.output


def test_dodecacode_search_failure(runner, mocker) -> None:
    """Checks the exit code when the search finds nothing"""
    mocker.patch(
        "doobcodes.cli.campaigns.search_dodecacode", return_value=None
    )
    result = runner.invoke(cli, ["dodecacode"])
    assert result.exit_code == EXIT_VERIFICATION_FAILED
