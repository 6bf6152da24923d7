import pytest
import yaml

from hurwitzkit.core.config import Config, get_config
from hurwitzkit.core.errors import (
    AcceptanceError,
    BudgetExceededError,
    ComputationError,
    HurwitzKitError,
    ValidationError,
    require,
)


def test_defaults(config):
    assert config.limits.max_states == 10 ** 7
    assert config.limits.exact_nnz_threshold == 20000
    assert config.stabilizer.d_max == 6
    assert config.census.slack_c == 3.0
    assert config.output.out_dir == "results"
    assert get_config() is config


def test_yaml_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text(yaml.dump({"limits": {"max_states": 500}, "output": {"jobs": 3}}))
    config = Config(str(path))
    assert config.limits.max_states == 500
    assert config.output.jobs == 3
    assert config.limits.exact_nnz_threshold == 20000


def test_environment_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("HURWITZKIT_MAX_STATES", "1234")
    monkeypatch.setenv("HURWITZKIT_SEED", "9")
    monkeypatch.setenv("HURWITZKIT_OUT_DIR", "elsewhere")
    config = Config(str(tmp_path / "none.yaml"))
    assert config.limits.max_states == 1234
    assert config.output.seed == 9
    assert config.output.out_dir == "elsewhere"


def test_dotted_get(config):
    assert config.get("sampler.e_cap") == 4
    with pytest.raises(KeyError):
        config.get("sampler.nothing")


def test_save_config(tmp_path, config):
    config.limits.max_states = 77
    path = tmp_path / "saved" / "config.yaml"
    config.save_config(str(path))
    assert Config(str(path)).limits.max_states == 77


def test_exit_codes():
    assert ValidationError("x").exit_code == 2
    assert ComputationError("x").exit_code == 3
    assert BudgetExceededError("x").exit_code == 3
    assert AcceptanceError("x").exit_code == 4
    assert isinstance(BudgetExceededError("x"), HurwitzKitError)


def test_error_context_in_message():
    error = ComputationError("rank mismatch", {"n": 4, "degree": 2})
    assert str(error) == "rank mismatch (degree=2, n=4)"


def test_require():
    require(True, "never raised")
    with pytest.raises(ValidationError):
        require(False, "bad n", n=3)
