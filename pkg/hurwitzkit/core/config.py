"""Configuration management for HurwitzKit."""

import os
from pathlib import Path
from typing import Optional, Any
import yaml
from pydantic import BaseModel, Field
from dotenv import load_dotenv


class LimitsConfig(BaseModel):
    """Hard size limits and linear algebra thresholds."""
    group_size_cap: int = Field(default=5000, description="Largest group built by closure")
    max_states: int = Field(default=10_000_000, description="Largest |c|^n enumerated")
    exact_nnz_threshold: int = Field(default=20_000, description="Above this many nonzeros ranks are modular-certified")
    modular_retry_cap: int = Field(default=4, description="Prime pairs tried before an exactness failure")
    symplectic_budget: int = Field(default=1_000_000, description="Largest symplectic group enumerated")
    structure_budget: int = Field(default=3 ** 8, description="Largest l-part order resolved")
    homology_module_n_max: int = Field(default=4, description="Degree window of the H_1 module")


class StabilizerConfig(BaseModel):
    """Search window for the central element U_D."""
    d_max: int = Field(default=6)
    n_max: int = Field(default=12)
    min_tail_periods: int = Field(default=2, description="Zero tail must span this many periods of deg U")


class SamplerConfig(BaseModel):
    """Random cokernel sampling."""
    e_cap: int = Field(default=4)
    saturation_retry_cap: int = Field(default=4)
    e_cap_step: int = Field(default=2)


class CensusConfig(BaseModel):
    """Function-field census settings."""
    slack_c: float = Field(default=3.0, description="Acceptance slack C in |avg - 1| <= C/sqrt(q)")
    failure_fraction: float = Field(default=0.001)
    random_divisors: int = Field(default=20, description="Divisors per curve for the h-annihilation check")
    chunk_size: int = Field(default=256)
    sylow_retry_cap: int = Field(default=64)


class OutputConfig(BaseModel):
    """Defaults for where and how results are written."""
    out_dir: str = Field(default="results")
    force: bool = Field(default=False)
    jobs: int = Field(default=1)
    seed: int = Field(default=0)


class HurwitzKitConfig(BaseModel):
    """Main configuration model."""
    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    stabilizer: StabilizerConfig = Field(default_factory=StabilizerConfig)
    sampler: SamplerConfig = Field(default_factory=SamplerConfig)
    census: CensusConfig = Field(default_factory=CensusConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)


class Config:
    """Configuration manager for HurwitzKit."""

    def __init__(self, config_path: Optional[str] = None):
        load_dotenv()

        self.config_path = config_path or os.getenv(
            "HURWITZKIT_CONFIG",
            self._get_default_config_path()
        )

        self.config = self._load_config()
        self._apply_env_overrides()

    def _get_default_config_path(self) -> str:
        """Get the default configuration file path."""
        local_config = Path("hurwitzkit.yaml")
        if local_config.exists():
            return str(local_config)

        return str(Path.home() / ".hurwitzkit" / "config.yaml")

    def _load_config(self) -> HurwitzKitConfig:
        """Load configuration from file."""
        config_path = Path(self.config_path)

        if config_path.exists():
            with open(config_path, 'r') as f:
                data = yaml.safe_load(f) or {}
                return HurwitzKitConfig(**data)

        return HurwitzKitConfig()

    def _apply_env_overrides(self):
        """Apply environment variable overrides."""
        if max_states := os.getenv("HURWITZKIT_MAX_STATES"):
            self.config.limits.max_states = int(max_states)

        if nnz := os.getenv("HURWITZKIT_EXACT_NNZ"):
            self.config.limits.exact_nnz_threshold = int(nnz)

        if cap := os.getenv("HURWITZKIT_GROUP_SIZE_CAP"):
            self.config.limits.group_size_cap = int(cap)

        if jobs := os.getenv("HURWITZKIT_JOBS"):
            self.config.output.jobs = int(jobs)

        if out_dir := os.getenv("HURWITZKIT_OUT_DIR"):
            self.config.output.out_dir = out_dir

        if seed := os.getenv("HURWITZKIT_SEED"):
            self.config.output.seed = int(seed)

    @property
    def limits(self) -> LimitsConfig:
        return self.config.limits

    @property
    def stabilizer(self) -> StabilizerConfig:
        return self.config.stabilizer

    @property
    def sampler(self) -> SamplerConfig:
        return self.config.sampler

    @property
    def census(self) -> CensusConfig:
        return self.config.census

    @property
    def output(self) -> OutputConfig:
        return self.config.output

    def get(self, dotted_key: str) -> Any:
        """Read one setting by dotted path, e.g. ``limits.max_states``."""
        node: Any = self.config
        for part in dotted_key.split("."):
            if not hasattr(node, part):
                raise KeyError(dotted_key)
            node = getattr(node, part)
        return node

    def save_config(self, path: Optional[str] = None):
        """Save configuration to file."""
        config_path = Path(path or self.config_path)
        config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(config_path, 'w') as f:
            yaml.dump(self.config.model_dump(), f, default_flow_style=False)


_default: Optional[Config] = None


def get_config() -> Config:
    """Process-wide configuration, loaded on first use."""
    global _default
    if _default is None:
        _default = Config()
    return _default


def set_config(config: Config) -> None:
    """Install a configuration object for the current process."""
    global _default
    _default = config
