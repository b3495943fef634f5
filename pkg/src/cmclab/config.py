"""Run configuration: a flat JSON object with one optional nested map.

Allowed keys: family, H, u0, du0, lambda, r, x_min, x_max, y_min, y_max,
nx, ny, step, out_dir, input, tolerances.  "tolerances" is the only nested
value, a map from registered check names to positive numbers.  Unknown keys
are rejected so typos cannot silently disable an override.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError
from .frames import SpectralParam
from .surface_data import GridSpec

FAMILIES = ("cylinder", "delaunay", "custom-file")

_SCALAR_KEYS = {
    "family": str,
    "H": float,
    "u0": float,
    "du0": float,
    "lambda": float,
    "r": float,
    "x_min": float,
    "x_max": float,
    "y_min": float,
    "y_max": float,
    "nx": int,
    "ny": int,
    "step": float,
    "out_dir": str,
    "input": str,
}


@dataclass(frozen=True)
class RunConfig:
    family: str
    lam: float
    out_dir: str
    r: float | None = None
    H: float = 0.5
    u0: float = 0.3
    du0: float = 0.0
    x_min: float = -1.0
    x_max: float = 1.0
    y_min: float = -1.0
    y_max: float = 1.0
    nx: int = 101
    ny: int = 101
    step: float = 1e-3
    input_path: str | None = None
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigError(
                f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}"
            )
        if self.r is None:
            object.__setattr__(self, "r", 0.5 * self.lam)
        if not 0.0 < self.r < self.lam < 1.0:
            raise ConfigError(
                f"need 0 < r < lambda < 1, got r = {self.r}, lambda = {self.lam}"
            )
        if self.H == 0:
            raise ConfigError("H must be nonzero")
        if self.nx < 5 or self.ny < 5:
            raise ConfigError(f"grid must be at least 5x5, got {self.nx}x{self.ny}")
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ConfigError("grid extents must satisfy x_min < x_max, y_min < y_max")
        if not self.step > 0:
            raise ConfigError("profile step must be positive")
        if self.family == "custom-file" and not self.input_path:
            raise ConfigError("custom-file family requires an 'input' path")

    @property
    def Q(self) -> float:
        # normalized isothermic data
        return self.H / 2.0

    def grid(self) -> GridSpec:
        return GridSpec(
            self.x_min, self.x_max, self.y_min, self.y_max, self.nx, self.ny
        )

    def spectral(self) -> SpectralParam:
        return SpectralParam(self.lam, self.r)


def _coerce(key: str, value, kind):
    if isinstance(value, bool):
        raise ConfigError(f"key {key!r} must be {kind.__name__}, got boolean")
    if kind is float and isinstance(value, (int, float)):
        return float(value)
    if kind is int:
        if not isinstance(value, int):
            raise ConfigError(f"key {key!r} must be an integer, got {value!r}")
        return value
    if kind is str:
        if not isinstance(value, str):
            raise ConfigError(f"key {key!r} must be a string, got {value!r}")
        return value
    if not isinstance(value, kind):
        raise ConfigError(f"key {key!r} must be {kind.__name__}, got {value!r}")
    return value


def config_from_mapping(obj: dict) -> RunConfig:
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    unknown = sorted(set(obj) - set(_SCALAR_KEYS) - {"tolerances"})
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    kwargs = {}
    rename = {"lambda": "lam", "input": "input_path"}
    for key, kind in _SCALAR_KEYS.items():
        if key in obj:
            kwargs[rename.get(key, key)] = _coerce(key, obj[key], kind)
    tols = obj.get("tolerances", {})
    if not isinstance(tols, dict):
        raise ConfigError("'tolerances' must be a map of check name to number")
    for name, val in tols.items():
        if isinstance(val, bool) or not isinstance(val, (int, float)):
            raise ConfigError(f"tolerance {name!r} must be a number, got {val!r}")
    kwargs["tolerances"] = {k: float(v) for k, v in tols.items()}
    for required in ("family", "lam", "out_dir"):
        json_name = {"lam": "lambda"}.get(required, required)
        if required not in kwargs:
            raise ConfigError(f"missing required config key {json_name!r}")
    return RunConfig(**kwargs)


def load_config(path) -> RunConfig:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ConfigError(f"config is not valid JSON: {e}") from None
    return config_from_mapping(obj)
