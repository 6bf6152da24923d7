import json

import pytest

from hurwitzkit.cohen_lenstra.sampler import STREAM_SIZE
from hurwitzkit.core.errors import ComputationError, ValidationError
from hurwitzkit.models.experiment import ANCHORS
from hurwitzkit.models import ExperimentConfig, Report
from hurwitzkit.reports import (
    ExperimentFactory,
    load_experiment_file,
    load_report,
    parse_experiment_text,
    parse_targets,
    render_csv,
    render_plot,
    run_experiment,
)
from hurwitzkit.reports.experiments import ALL_EXPERIMENTS, OrbitsExperiment
from hurwitzkit.reports.writers import report_files


def make_report(kind, rows=None, summary=None, columns=None):
    return Report(kind=kind, tool_version="test", config={}, seed=0, columns=columns or [],
                  rows=rows or [], summary=summary or {})


def test_parse_experiment_text():
    config = parse_experiment_text(
        "# S3 orbits\n"
        "kind = orbits\n"
        "group = S3\n"
        "class_rep = (1 2)   # transpositions\n"
        "\n"
        "n_max = 3\n"
        "seed = 4\n"
    )
    assert config.kind == "orbits"
    assert config.seed == 4
    assert config.params == {"group": "S3", "class_rep": "(1 2)", "n_max": "3"}


@pytest.mark.parametrize("text", [
    "group = S3\n",
    "kind = orbits\nkind = ring\n",
    "kind = orbits\nn_max 3\n",
    "kind = nothing\n",
    "kind = orbits\nseed = x\n",
    "kind = orbits\n2bad = 1\n",
])
def test_parse_experiment_text_rejects(text):
    with pytest.raises(ValidationError):
        parse_experiment_text(text)


def test_missing_experiment_file(tmp_path):
    with pytest.raises(ValidationError):
        load_experiment_file(str(tmp_path / "missing.txt"))


def test_render_csv():
    text = render_csv(["n", "ok", "x", "none"], [{"n": 1, "ok": True, "x": 0.5, "none": None}])
    assert text == "n,ok,x,none\n1,true,0.5,\n"


def test_render_csv_rejects_separator():
    with pytest.raises(ValidationError):
        render_csv(["f"], [{"f": "1,2"}])


def test_parse_targets():
    targets = parse_targets("1; 2; 1,1", 3)
    assert [A.label() for A in targets] == ["Z/3", "Z/9", "Z/3xZ/3"]
    with pytest.raises(ValidationError):
        parse_targets(" ; ", 3)


def test_factory_kinds():
    kinds = ExperimentFactory.get_available_types()
    for kind in ("orbits", "ring", "kcomplex", "homology", "cl-sample", "sp-check", "ff-census"):
        assert kind in kinds


def test_parameters_validated_before_running(tmp_path):
    config = ExperimentConfig(kind="cl-sample", params={"targets": ""})
    with pytest.raises(ValidationError):
        run_experiment(config, out_dir=str(tmp_path))
    assert not (tmp_path / "cl-sample.csv").exists()


def test_unknown_parameter_value(tmp_path):
    config = ExperimentConfig(kind="orbits", params={"group": "S3", "class_rep": "(1 2)", "n_max": "two"})
    with pytest.raises(ValidationError):
        run_experiment(config, out_dir=str(tmp_path))


def test_orbits_run(tmp_path):
    config = ExperimentConfig(kind="orbits", params={"group": "S3", "class_rep": "(1 2)", "n_max": "2"})
    report, paths = run_experiment(config, out_dir=str(tmp_path))
    assert sorted(paths) == ["orbits.csv", "orbits.json"]
    lines = (tmp_path / "orbits.csv").read_text().splitlines()
    assert lines[0] == "n,orbit_id,size,boundary_elt,monodromy_subgroup_id,nielsen_id,canonical_rep"
    assert len(lines) == 1 + 1 + 3 + 5
    assert (tmp_path / "timing.json").exists()
    data = json.loads((tmp_path / "orbits.json").read_text())
    assert data["summary"]["orbit_counts"] == {"0": 1, "1": 3, "2": 5}
    assert data["anchors"] == ["§2.3"]
    assert load_report(str(tmp_path)).rows == data["rows"]


def test_runs_refuse_to_overwrite(tmp_path):
    config = ExperimentConfig(kind="orbits", params={"group": "S3", "class_rep": "(1 2)", "n_max": "1"})
    run_experiment(config, out_dir=str(tmp_path))
    first = (tmp_path / "orbits.json").read_text()
    with pytest.raises(ValidationError):
        run_experiment(config, out_dir=str(tmp_path))
    run_experiment(config, out_dir=str(tmp_path), force=True)
    assert (tmp_path / "orbits.json").read_text() == first


def test_sp_check_run(tmp_path):
    config = ExperimentConfig(kind="sp-check", params={"g": "1", "target": "1,1"})
    report, _ = run_experiment(config, out_dir=str(tmp_path))
    assert report.summary == {"transitive": False, "nonempty": False}


def test_betti_plot_needs_series():
    with pytest.raises(ValidationError):
        render_plot(make_report("homology"), "betti-vs-n")


def test_plot_needs_matching_report():
    with pytest.raises(ValidationError):
        render_plot(make_report("orbits"), "hq-vs-q")


def test_distribution_plot():
    report = make_report("ff-census", summary={
        "l_part_distribution": {"0": 0.6, "1": 0.4},
        "mu_masses": {"0": 0.56, "1": 0.28},
    })
    svg = render_plot(report, "distribution-vs-mu")
    assert svg.startswith("<svg")
    assert "Cohen-Lenstra mu" in svg
    assert "§8 μ" in svg


def test_betti_plot():
    report = make_report("homology", rows=[
        {"n": 2, "betti": 5, "bijective": True},
        {"n": 3, "betti": 5, "bijective": None},
    ], summary={"p": 1})
    svg = render_plot(report, "betti-vs-n")
    assert "<svg" in svg and "</svg>" in svg
    assert "Theorem th:stability" in svg


def test_unknown_plot_kind():
    with pytest.raises(ValidationError):
        render_plot(make_report("homology"), "pie")


def test_experiment_anchors_resolve():
    for experiment in ALL_EXPERIMENTS:
        assert experiment.anchors
        assert all(a in ANCHORS for a in experiment.anchors)


def test_homology_run_cites_stability(tmp_path):
    params = {"group": "S3", "class_rep": "(1 2)", "n_max": "3"}
    report, _ = run_experiment(ExperimentConfig(kind="homology", params=params), out_dir=str(tmp_path))
    assert "Theorem th:stability" in report.anchors
    quotient = ExperimentFactory.create(ExperimentConfig(kind="homology", params={**params, "quotient_by_G": "true"}))
    assert "Corollary co:modgstability" in quotient.anchors


def test_unknown_anchor_is_rejected(tmp_path):
    report = make_report("orbits")
    report.anchors = ["Theorem 99"]
    with pytest.raises(ValidationError):
        report_files(report)


def test_runs_are_byte_identical(tmp_path):
    params = {"l": "3", "N": "3", "samples": str(STREAM_SIZE + 17), "targets": "1; 1,1"}
    outputs = []
    for name, jobs in (("first", 1), ("again", 1), ("parallel", 2)):
        out = tmp_path / name
        run_experiment(ExperimentConfig(kind="cl-sample", params=params, seed=5), out_dir=str(out), jobs=jobs)
        outputs.append([(out / f).read_bytes() for f in ("cl-sample.csv", "cl-sample.json")])
    assert outputs[0] == outputs[1] == outputs[2]


def test_failed_computation_leaves_no_output(tmp_path, monkeypatch):
    def fail(self):
        raise ComputationError("rank mismatch")

    monkeypatch.setattr(OrbitsExperiment, "compute", fail)
    out = tmp_path / "out"
    config = ExperimentConfig(kind="orbits", params={"group": "S3", "class_rep": "(1 2)", "n_max": "2"})
    with pytest.raises(ComputationError):
        run_experiment(config, out_dir=str(out))
    assert list(out.iterdir()) == []


def test_failed_write_removes_staged_files(tmp_path, monkeypatch):
    def broken(report):
        yield f"{report.kind}.csv", "n\n"
        raise ComputationError("disk full")

    monkeypatch.setattr("hurwitzkit.reports.run.report_files", broken)
    config = ExperimentConfig(kind="orbits", params={"group": "S3", "class_rep": "(1 2)", "n_max": "1"})
    with pytest.raises(ComputationError):
        run_experiment(config, out_dir=str(tmp_path / "out"))
    assert list((tmp_path / "out").iterdir()) == []


def test_census_parameters_checked_before_running(tmp_path):
    for params in ({"q": "5", "n": "4"}, {"q": "15", "n": "3", "l": "7"}, {"q": "9", "n": "3", "l": "3"}):
        with pytest.raises(ValidationError):
            ExperimentFactory.create(ExperimentConfig(kind="ff-census", params=params))
    with pytest.raises(ValidationError):
        run_experiment(ExperimentConfig(kind="ff-census", params={"q": "5", "n": "2"}), out_dir=str(tmp_path))
    assert not (tmp_path / "ff-census.csv").exists()
