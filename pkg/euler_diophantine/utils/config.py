import copy
import logging
from pathlib import Path
from typing import Any, Literal

from luxonis_ml.utils import LuxonisConfig
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from euler_diophantine.utils.types import SolveMode

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_GUARD_BITS",
    "DEFAULT_RHO_ITERATIONS",
    "DEFAULT_TRIAL_DIVISION_BOUND",
    "Config",
    "FactorizationConfig",
    "OutputConfig",
    "SolverConfig",
    "parse_overrides",
]

DEFAULT_GUARD_BITS = 2**20
DEFAULT_TRIAL_DIVISION_BOUND = 10**6
DEFAULT_RHO_ITERATIONS = 200_000


class BaseConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FactorizationConfig(BaseConfig):
    trial_division_bound: int = Field(DEFAULT_TRIAL_DIVISION_BOUND, ge=2)
    rho_iterations: int = Field(DEFAULT_RHO_ITERATIONS, ge=1)


class SolverConfig(BaseConfig):
    mode: SolveMode = SolveMode.CANONICAL
    guard_bits: int = Field(DEFAULT_GUARD_BITS, ge=1)
    oracle_check: bool = False

    @field_serializer("mode")
    def get_enum_value(self, v: SolveMode, _) -> str:
        return str(v.value)

    @model_validator(mode="after")
    def check_guard_bits(self):
        if self.guard_bits < 64:
            logger.warning(
                f"`guard_bits` is set to {self.guard_bits}. "
                "Almost every raw-mode solve will exceed it."
            )
        return self


class OutputConfig(BaseConfig):
    format: Literal["plain", "json", "latex"] = "plain"


class Config(LuxonisConfig):
    use_rich_text: bool = True
    factorization: FactorizationConfig = FactorizationConfig()
    solver: SolverConfig = SolverConfig()
    output: OutputConfig = OutputConfig()

    @classmethod
    def get_config(
        cls,
        cfg: str | Path | dict[str, Any] | None = None,
        overrides: dict[str, Any] | None = None,
    ) -> "Config":
        """Loads the config and applies dotted-key overrides.

        @type cfg: str | Path | dict[str, Any] | None
        @param cfg: Path to a YAML file, an already loaded dictionary or C{None}
            for defaults.
        @type overrides: dict[str, Any] | None
        @param overrides: Mapping of dotted keys (C{solver.guard_bits}) to values.
        @rtype: L{Config}
        @return: Validated config.
        """
        if cfg is None and not overrides:
            return cls()
        if isinstance(cfg, Path):
            cfg = str(cfg)
        elif not isinstance(cfg, str):
            cfg = copy.deepcopy(cfg or {})
        overrides = {key: _as_text(value) for key, value in (overrides or {}).items()}
        return super().get_config(cfg, overrides)


def _as_text(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def parse_overrides(opts: list[str] | tuple[str, ...] | None) -> dict[str, str]:
    """Turns C{["solver.guard_bits", "4096", ...]} into a dictionary.

    @raises ValueError: If the list has odd length.
    """
    overrides: dict[str, str] = {}
    if not opts:
        return overrides
    if len(opts) % 2 != 0:
        raise ValueError("Override options should be a list of key-value pairs")
    for i in range(0, len(opts), 2):
        overrides[opts[i]] = opts[i + 1]
    return overrides
