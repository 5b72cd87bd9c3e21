"""Run configuration: defaults <- config file <- command-line flags.

Config files are flat ``key = value`` text with ``#`` comments; keys use the
same kebab-case names as the CLI flags.  Unknown keys are rejected.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from chronon.gamma_algebra import PhysicalParams

COMMANDS = ("verify-algebra", "snyder", "zitterbewegung", "averaging", "all")


class ConfigError(ValueError):
    """Malformed or inconsistent run configuration."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    hbar: float = 1.0
    c: float = 1.0
    mass: float = 1.0
    a: float | None = None  # None -> Compton wavelength hbar/(m c)
    grid_n: int = 1024
    p_max: float = 20.0
    grid_n_2d: int = 256
    p_max_2d: float = 12.0
    p0: float = 0.0
    sigma_p: float = 0.1
    mode: str = "mixed"
    spinor_seed: tuple[complex, ...] = (1 + 0j, 0j, 1 + 0j, 0j)
    t_max: float = 50.0
    n_samples: int = 4096
    window: float | None = None  # extra averaging window; None -> canonical windows only
    output_dir: str = ""
    emit_plots: bool = True
    seed: int = 42

    def params(self) -> PhysicalParams:
        return PhysicalParams(hbar=self.hbar, c=self.c, m=self.mass, a=self.a)

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        for name in ("hbar", "c", "mass", "p_max", "p_max_2d", "sigma_p", "t_max"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name.replace('_', '-')} must be strictly positive")
        if self.a is not None and self.a < 0:
            raise ConfigError("a must be nonnegative")
        if self.mode not in ("mixed", "positive", "negative"):
            raise ConfigError(f"mode must be mixed, positive or negative, got {self.mode!r}")
        if len(self.spinor_seed) != 4:
            raise ConfigError("spinor-seed needs exactly 4 components")
        if self.n_samples < 2 or self.grid_n < 8 or self.grid_n_2d < 8:
            raise ConfigError("grid and sample counts are too small")
        if self.window is not None and self.window <= 0:
            raise ConfigError("window must be strictly positive")
        return self


# key -> (attribute, parser)
def _parse_bool(s: str) -> bool:
    if s.lower() in ("true", "1", "yes"):
        return True
    if s.lower() in ("false", "0", "no"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


def _parse_seed_vector(s: str) -> tuple[complex, ...]:
    parts = [p.strip() for p in s.split(",")]
    return tuple(complex(p) for p in parts)


KEY_SPECS = {
    "hbar": ("hbar", float),
    "c": ("c", float),
    "mass": ("mass", float),
    "a": ("a", float),
    "grid-n": ("grid_n", int),
    "p-max": ("p_max", float),
    "grid-n-2d": ("grid_n_2d", int),
    "p-max-2d": ("p_max_2d", float),
    "p0": ("p0", float),
    "sigma-p": ("sigma_p", float),
    "mode": ("mode", str),
    "spinor-seed": ("spinor_seed", _parse_seed_vector),
    "t-max": ("t_max", float),
    "n-samples": ("n_samples", int),
    "window": ("window", float),
    "output-dir": ("output_dir", str),
    "emit-plots": ("emit_plots", _parse_bool),
    "seed": ("seed", int),
}


def read_config_file(path: str) -> dict[str, object]:
    values: dict[str, object] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if key not in KEY_SPECS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            attr, parse = KEY_SPECS[key]
            try:
                values[attr] = parse(val)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


def resolve(command: str, file_values: dict[str, object],
            flag_values: dict[str, object]) -> RunConfig:
    """Apply precedence: defaults, then config file, then flags."""
    cfg = RunConfig(command=command)
    cfg = replace(cfg, **file_values)
    cfg = replace(cfg, **{k: v for k, v in flag_values.items() if v is not None})
    if not cfg.output_dir:
        cfg = replace(cfg, output_dir=os.environ.get("CHRONON_OUTPUT_DIR", "out"))
    return cfg.validate()


def manifest_lines(cfg: RunConfig, outputs: list[str]) -> list[str]:
    # Comment lines keep the manifest loadable back through --config.
    lines = [f"# command = {cfg.command}"]
    for key, (attr, _) in KEY_SPECS.items():
        val = getattr(cfg, attr)
        if val is None:
            continue  # unset optional key; omitted so the manifest reparses cleanly
        if attr == "spinor_seed":
            val = ",".join(str(v) for v in val)
        lines.append(f"{key} = {val}")
    lines.extend(f"# output: {name}" for name in outputs)
    return lines
