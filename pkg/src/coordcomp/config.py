"""Flat ``key = value`` run configuration.

Defaults reproduce the baseline calibration. A config file overrides the
defaults and command-line flags override the file. Every key is validated on
its own; errors carry the offending line number.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Callable, Mapping, Optional

from .model import DomainError, ModelParams

EXPERIMENTS = ("sweep", "heatmap", "robustness", "props")
MODES = ("pam", "random")


class ConfigError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "config"):
        self.line = line
        where = f"{source} line {line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class RunConfig:
    A: float = 1.0
    alpha: float = 0.65
    c0: float = 0.3
    gamma: float = 1.0
    beta: float = 0.2
    delta: float = 0.0
    T0: float = 200.0
    n_managers: int = 20
    n_workers: int = 400
    manager_skill_min: float = 0.05
    manager_skill_max: float = 1.0
    worker_skill_dist: tuple[float, float] = (2.0, 5.0)
    seed: int = 2026
    experiment: str = "sweep"
    out: str = "results"
    mode: str = "pam"
    svg: bool = False
    ka_min: float = 0.0
    ka_max: float = 10.0
    ka_step: float = 0.2
    heatmap_beta_min: float = 0.0
    heatmap_beta_max: float = 4.0
    heatmap_beta_step: float = 0.1
    heatmap_delta_min: float = 0.0
    heatmap_delta_max: float = 0.5
    heatmap_delta_step: float = 0.02
    heatmap_ka: float = 5.0

    @property
    def params(self) -> ModelParams:
        names = {f.name for f in fields(ModelParams)}
        return ModelParams(**{k: v for k, v in asdict(self).items() if k in names})


def _float(text: str) -> float:
    v = float(text)  # locale-independent: always a period decimal separator
    if not math.isfinite(v):
        raise ValueError("value must be finite")
    return v


def _int(text: str) -> int:
    return int(text)


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected true/false, got {text!r}")


def _pair(text: str) -> tuple[float, float]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 2:
        raise ValueError(f"expected two numbers 'a, b', got {text!r}")
    return _float(parts[0]), _float(parts[1])


def _choice(options: tuple[str, ...]) -> Callable[[str], str]:
    def parse(text: str) -> str:
        if text not in options:
            raise ValueError(f"expected one of {', '.join(options)}, got {text!r}")
        return text
    return parse


_pos = (lambda v: v > 0, "must be > 0")
_nonneg = (lambda v: v >= 0, "must be >= 0")
_unit_open = (lambda v: 0 < v < 1, "must lie in (0, 1)")
_unit_half = (lambda v: 0 < v <= 1, "must lie in (0, 1]")
_count = (lambda v: v >= 1, "must be >= 1")
_any = (lambda v: True, "")

KEYS: dict[str, tuple[Callable[[str], Any], tuple]] = {
    "A": (_float, _pos),
    "alpha": (_float, _unit_open),
    "c0": (_float, _pos),
    "gamma": (_float, _nonneg),
    "beta": (_float, _nonneg),
    "delta": (_float, _nonneg),
    "T0": (_float, _pos),
    "n_managers": (_int, _count),
    "n_workers": (_int, _count),
    "manager_skill_min": (_float, _unit_half),
    "manager_skill_max": (_float, _unit_half),
    "worker_skill_dist": (_pair, (lambda v: v[0] > 0 and v[1] > 0, "shapes must be > 0")),
    "seed": (_int, (lambda v: v >= 0, "must be >= 0")),
    "experiment": (_choice(EXPERIMENTS), _any),
    "out": (str, (lambda v: bool(v), "must be a nonempty path")),
    "mode": (_choice(MODES), _any),
    "svg": (_bool, _any),
    "ka_min": (_float, _nonneg),
    "ka_max": (_float, _nonneg),
    "ka_step": (_float, _pos),
    "heatmap_beta_min": (_float, _nonneg),
    "heatmap_beta_max": (_float, _nonneg),
    "heatmap_beta_step": (_float, _pos),
    "heatmap_delta_min": (_float, _nonneg),
    "heatmap_delta_max": (_float, _nonneg),
    "heatmap_delta_step": (_float, _pos),
    "heatmap_ka": (_float, _nonneg),
}

# pairs checked jointly: (lower key, upper key)
_ORDERED = (
    ("manager_skill_min", "manager_skill_max"),
    ("ka_min", "ka_max"),
    ("heatmap_beta_min", "heatmap_beta_max"),
    ("heatmap_delta_min", "heatmap_delta_max"),
)


def convert(key: str, text: str, line: Optional[int] = None, source: str = "config") -> Any:
    if key not in KEYS:
        raise ConfigError(f"unknown key {key!r}", line, source)
    parse, (ok, why) = KEYS[key]
    try:
        value = parse(text.strip())
    except ValueError as exc:
        raise ConfigError(f"cannot parse {key} = {text.strip()!r}: {exc}", line, source) from None
    if not ok(value):
        raise ConfigError(f"{key} = {text.strip()} is out of range: {why}", line, source)
    return value


def read_pairs(text: str) -> list[tuple[int, str, str]]:
    """(line number, key, raw value) for each assignment in a config text."""
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", no)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("missing key before '='", no)
        out.append((no, key, value))
    return out


def parse_config(text: str = "", overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """Defaults, then ``text``, then ``overrides`` (raw strings or typed values)."""
    values: dict[str, Any] = {}
    origin: dict[str, tuple[Optional[int], str]] = {}
    for no, key, raw in read_pairs(text):
        values[key] = convert(key, raw, no)
        origin[key] = (no, "config")
    for key, raw in (overrides or {}).items():
        if raw is None:
            continue
        values[key] = convert(key, raw if isinstance(raw, str) else _emit_value(raw), None, f"--{key}")
        origin[key] = (None, f"--{key}")

    cfg = replace(RunConfig(), **values)
    for lo, hi in _ORDERED:
        if getattr(cfg, lo) > getattr(cfg, hi):
            culprit = hi if hi in origin else lo
            line, source = origin.get(culprit, (None, "config"))
            raise ConfigError(f"{lo} ({getattr(cfg, lo)}) exceeds {hi} ({getattr(cfg, hi)})", line, source)
    try:
        cfg.params
    except DomainError as exc:
        raise ConfigError(str(exc)) from None
    return cfg


def _emit_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return ", ".join(repr(float(x)) for x in v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def emit_config(cfg: RunConfig) -> str:
    """Config text that parses back to ``cfg`` exactly."""
    return "".join(f"{k} = {_emit_value(v)}\n" for k, v in asdict(cfg).items())
