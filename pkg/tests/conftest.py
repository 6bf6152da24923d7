import pytest

from hurwitzkit.core.config import Config, set_config
from hurwitzkit.function_field import HyperellipticCurve, finite_field
from hurwitzkit.groups import load_pair

ENV_OVERRIDES = (
    "HURWITZKIT_CONFIG",
    "HURWITZKIT_MAX_STATES",
    "HURWITZKIT_EXACT_NNZ",
    "HURWITZKIT_GROUP_SIZE_CAP",
    "HURWITZKIT_JOBS",
    "HURWITZKIT_OUT_DIR",
    "HURWITZKIT_SEED",
)


@pytest.fixture(autouse=True)
def config(tmp_path, monkeypatch):
    """A default configuration, isolated from the user's files and environment."""
    for name in ENV_OVERRIDES:
        monkeypatch.delenv(name, raising=False)
    cfg = Config(str(tmp_path / "no-such-config.yaml"))
    set_config(cfg)
    yield cfg
    set_config(None)


@pytest.fixture
def s3_pair():
    return load_pair("S3", "(1 2)")


@pytest.fixture
def z2_pair():
    return load_pair("Z2", "(1 2)")


@pytest.fixture
def curve_f5():
    """y^2 = x^3 + x over F_5: h = 4, affine points (0,0), (2,0), (3,0)."""
    return HyperellipticCurve(finite_field(5), (1, 0, 1, 0))
