import json

import pytest
from click.testing import CliRunner

from hurwitzkit import __version__
from hurwitzkit.cli.main import cli


@pytest.fixture
def invoke(tmp_path):
    runner = CliRunner()
    settings = str(tmp_path / "settings.yaml")
    out_dir = str(tmp_path / "results")

    def run(*args):
        return runner.invoke(cli, ["--config", settings, "--out-dir", out_dir, *args])

    run.out_dir = tmp_path / "results"
    return run


def test_version():
    result = CliRunner().invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_orbits_command(invoke):
    result = invoke("orbits", "-g", "S3", "-c", "(1 2)", "--n-max", "2")
    assert result.exit_code == 0, result.output
    assert (invoke.out_dir / "orbits.csv").exists()
    assert "Wrote" in result.output


def test_existing_results_exit_two(invoke):
    assert invoke("orbits", "-g", "S3", "-c", "(1 2)", "--n-max", "1").exit_code == 0
    result = invoke("orbits", "-g", "S3", "-c", "(1 2)", "--n-max", "1")
    assert result.exit_code == 2
    assert "--force" in result.output
    assert invoke("--force", "orbits", "-g", "S3", "-c", "(1 2)", "--n-max", "1").exit_code == 0


def test_bad_class_exits_two(invoke):
    result = invoke("orbits", "-g", "S3", "-c", "(1 2 3 4 5 6 7 8 9", "--n-max", "1")
    assert result.exit_code == 2


def test_splitting_pair_is_refused(invoke):
    result = invoke("homology", "-g", "S4", "-c", "(1 2)", "--n-max", "3")
    assert result.exit_code == 2
    assert not (invoke.out_dir / "homology.csv").exists()


def test_empty_targets_exit_two(invoke):
    assert invoke("cl-sample", "--targets", "").exit_code == 2


def test_sp_check_command(invoke):
    result = invoke("sp-check", "--g", "1", "--target", "1")
    assert result.exit_code == 0, result.output
    data = json.loads((invoke.out_dir / "sp-check.json").read_text())
    assert data["summary"] == {"nonempty": True, "transitive": True}


def test_ff_census_warns(invoke):
    result = invoke("ff-census", "--q", "7", "--n", "1", "--l", "3")
    assert result.exit_code == 0, result.output
    assert "Warning" in result.output


def test_ff_census_rejects_even_degree(invoke):
    assert invoke("ff-census", "--q", "5", "--n", "4").exit_code == 2


def test_run_experiment_file(invoke, tmp_path):
    spec = tmp_path / "orbits.txt"
    spec.write_text("kind = orbits\ngroup = Z2\nclass_rep = (1 2)\nn_max = 3\n")
    result = invoke("run", str(spec))
    assert result.exit_code == 0, result.output
    data = json.loads((invoke.out_dir / "orbits.json").read_text())
    assert data["summary"]["orbit_counts"] == {"0": 1, "1": 1, "2": 1, "3": 1}


def test_show_command(invoke):
    invoke("orbits", "-g", "S3", "-c", "(1 2)", "--n-max", "2")
    result = invoke("show", str(invoke.out_dir / "orbits.json"), "--limit", "3")
    assert result.exit_code == 0, result.output
    assert "orbit_id" in result.output
    assert "6 more rows" in result.output


def test_plot_without_series(invoke):
    invoke("sp-check", "--g", "1", "--target", "1")
    result = invoke("plot", str(invoke.out_dir / "sp-check.json"), "--kind", "betti-vs-n")
    assert result.exit_code == 2
    assert not (invoke.out_dir / "betti-vs-n.svg").exists()


def test_config_show_key(invoke):
    result = invoke("config", "show", "--key", "limits.max_states")
    assert result.exit_code == 0
    assert "10000000" in result.output


def test_config_unknown_key(invoke):
    assert invoke("config", "show", "--key", "limits.nothing").exit_code == 2


def test_verify_single_criterion(invoke):
    result = invoke("verify", "--quick", "--only", "1")
    assert result.exit_code == 0, result.output
    assert "criteria passed" in result.output
