import json

import pytest

from qgrobner.main import cli
from qgrobner.models.algebra import Presentation
from qgrobner.services import examples_service
from qgrobner.services.examples_service import ExamplesService
from qgrobner.services.qspace import new_quantum_space
from qgrobner.services.veronese import veronese_kernel_gb


def test_twisted_cubic_kernel(runner):
    result = runner.invoke(cli, ["veronese-kernel", "--n", "1", "--d", "3", "--format", "text"])
    assert result.exit_code == 0
    assert result.output.splitlines()[1:] == [
        "y1*y1 - q^2 y0*y2",
        "y1*y2 - q y0*y3",
        "y2*y2 - q^2 y1*y3",
    ]


def test_twisted_cubic_at_q_equal_one(runner):
    result = runner.invoke(cli, ["veronese-kernel", "--n", "1", "--d", "3", "--assign", "q=1"])
    assert result.exit_code == 0
    assert result.output.splitlines()[1:] == [
        "y1*y1 - y0*y2",
        "y1*y2 - y0*y3",
        "y2*y2 - y1*y3",
    ]


def test_json_output_round_trips(runner):
    result = runner.invoke(cli, ["veronese-kernel", "--n", "2", "--d", "2", "--format", "json"])
    assert result.exit_code == 0
    parsed = Presentation.model_validate_json(result.output)
    assert parsed == veronese_kernel_gb(new_quantum_space(2), 2)


def test_output_is_deterministic(runner):
    args = ["veronese-present", "--n", "2", "--d", "2", "--derived", "--format", "json"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.output == second.output
    assert len(first.output.splitlines()) == 3


def test_output_file(runner, tmp_path):
    target = tmp_path / "kernel.txt"
    stdout = runner.invoke(cli, ["segre-kernel", "--n", "2", "--m", "1"])
    written = runner.invoke(cli, ["segre-kernel", "--n", "2", "--m", "1", "--output", str(target)])
    assert written.exit_code == 0
    assert target.read_text(encoding="utf-8") == stdout.output


def test_segre_threefold_kernel(runner):
    result = runner.invoke(cli, ["segre-kernel", "--n", "2", "--m", "1"])
    assert result.exit_code == 0
    assert "z11*z20 - qp z10*z21" in result.output.splitlines()


def test_segre_matrix_json(runner):
    result = runner.invoke(cli, ["segre-matrix", "--n", "1", "--m", "1", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["labels"] == ["z00", "z01", "z10", "z11"]
    assert payload["entries"][3][0] == [["q", 1], ["qp", 1]]


def test_veronese_matrix_text(runner):
    result = runner.invoke(cli, ["veronese-matrix", "--n", "1", "--d", "3"])
    assert result.exit_code == 0
    assert "q^-9" in result.output
    assert "q^9" in result.output


def test_koszul_dual(runner):
    result = runner.invoke(cli, ["koszul-dual", "--n", "1"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "# KoszulDual n=1",
        "xi1*xi0 - q^-1 xi0*xi1",
        "xi0*xi0",
        "xi1*xi1",
    ]


@pytest.mark.parametrize(
    "args",
    [
        ["certify", "--system", "veronese", "--n", "1", "--d", "3"],
        ["certify", "--system", "lifted", "--n", "2", "--d", "2"],
        ["certify", "--system", "segre", "--n", "2", "--m", "1"],
        ["certify", "--system", "quantum", "--n", "3"],
    ],
)
def test_certify_passes(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert "PASS" in result.output


def test_certify_json(runner):
    result = runner.invoke(
        cli, ["certify", "--system", "veronese", "--n", "1", "--d", "3", "--format", "json"]
    )
    payload = json.loads(result.output)
    assert payload["pass"] is True
    assert payload["normal3_count"] == payload["expected_dim3"] == 10


def test_certify_negative_controls_exit_one(runner):
    dropped = runner.invoke(
        cli, ["certify", "--system", "veronese", "--n", "1", "--d", "3", "--drop-rule", "1"]
    )
    assert dropped.exit_code == 1
    assert "FAIL" in dropped.output

    corrupted = runner.invoke(
        cli, ["certify", "--system", "lifted", "--n", "1", "--d", "2", "--corrupt-rule", "0"]
    )
    assert corrupted.exit_code == 1


@pytest.mark.parametrize(
    "args",
    [
        ["certify", "--system", "veronese", "--n", "1"],
        ["certify", "--system", "segre", "--n", "1"],
        ["certify", "--system", "veronese", "--n", "1", "--d", "3", "--drop-rule", "3"],
        ["certify", "--system", "cubic", "--n", "1"],
        ["veronese-kernel", "--n", "-1", "--d", "2"],
        ["veronese-kernel", "--n", "1", "--d", "0"],
        ["veronese-kernel", "--n", "1", "--d", "2", "--assign", "q=0"],
        ["eval", "--n", "1", "--word", "1,x"],
        ["eval", "--n", "1", "--word", "2,0"],
        ["segre-kernel", "--n", "1"],
    ],
)
def test_argument_errors_exit_two(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_eval_symbolic(runner):
    result = runner.invoke(cli, ["eval", "--n", "1", "--word", "1,0"])
    assert result.exit_code == 0
    assert result.output == "q x0*x1\n"


def test_eval_with_assignment(runner):
    result = runner.invoke(cli, ["eval", "--n", "1", "--word", "1,1,0", "--assign", "q=3/2"])
    assert result.exit_code == 0
    assert result.output == "9/4 x0*x1*x1\n"


def test_eval_through_veronese_map(runner):
    result = runner.invoke(cli, ["eval", "--n", "1", "--d", "3", "--word", "1,0"])
    assert result.exit_code == 0
    assert result.output == "q^3 x0*x0*x0*x0*x0*x1\n"


def test_eval_missing_parameter_exits_one(runner):
    result = runner.invoke(cli, ["eval", "--n", "2", "--word", "1,0", "--assign", "q20=2"])
    assert result.exit_code == 1


def test_examples_match_committed_corpus(runner):
    result = runner.invoke(cli, ["examples"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "twisted_cubic: ok",
        "rational_normal_curve_d4: ok",
        "veronese_surface: ok",
        "segre_quadric: ok",
        "segre_threefold: ok",
    ]


def test_examples_update_then_check(runner, tmp_path, monkeypatch):
    monkeypatch.setattr(examples_service, "_examples_service", ExamplesService(tmp_path))
    assert runner.invoke(cli, ["examples"]).exit_code == 1
    assert runner.invoke(cli, ["examples", "--update"]).exit_code == 0
    assert len(list(tmp_path.glob("*.json"))) == 5
    assert runner.invoke(cli, ["examples"]).exit_code == 0
