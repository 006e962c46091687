"""Run configuration: a flat JSON object whose keys mirror the RunConfig fields."""
from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, replace

from .spin_reps import MAX_SPIN, parse_spin

FORMATS = ("text", "json", "csv")
SUITES = ("algebra", "little-group", "derivation", "dirac", "parity", "dynamics", "noether")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    mass: float = 1.0
    spins: tuple = (0.5, 1.0, 1.5)
    samples: int = 1000
    seed: int = 42
    tolerances: dict = field(default_factory=dict)  # suite name -> tolerance override
    momentum_cap: float = 10.0
    format: str = "text"
    out: str | None = None
    scenario: dict | None = None  # trace block: {"m": .., "p": [..], "mix": [..]}

    def validated(self) -> "RunConfig":
        if isinstance(self.mass, bool) or not isinstance(self.mass, (int, float)) or not self.mass > 0:
            raise ConfigError(f"mass must be a positive number, got {self.mass!r}")
        try:
            spins = tuple(parse_spin(s) for s in self.spins)
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc
        if not spins or any(s == 0 or s > MAX_SPIN for s in spins):
            raise ConfigError(f"spins must be non-empty half-integers in (0, {MAX_SPIN}], got {self.spins!r}")
        if isinstance(self.samples, bool) or not isinstance(self.samples, int) or self.samples < 1:
            raise ConfigError(f"samples must be a positive integer, got {self.samples!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"seed must be a 64-bit non-negative integer, got {self.seed!r}")
        if not isinstance(self.momentum_cap, (int, float)) or not self.momentum_cap > 0:
            raise ConfigError(f"momentum_cap must be positive, got {self.momentum_cap!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        if not isinstance(self.tolerances, dict):
            raise ConfigError("tolerances must be an object mapping suite name to a number")
        for k, v in self.tolerances.items():
            if k not in SUITES:
                raise ConfigError(f"tolerance given for unknown suite {k!r}")
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0:
                raise ConfigError(f"tolerance for {k!r} must be a positive number")
        return replace(self, mass=float(self.mass), spins=spins, momentum_cap=float(self.momentum_cap))

    def tol(self, suite: str, default: float) -> float:
        return float(self.tolerances.get(suite, default))


def load_config(path) -> RunConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)


def config_from_dict(data) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {unknown}")
    if "spins" in data and not isinstance(data["spins"], list):
        raise ConfigError("spins must be a list")
    if "spins" in data:
        data = {**data, "spins": tuple(data["spins"])}
    return RunConfig(**data).validated()
