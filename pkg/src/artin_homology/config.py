"""Configuration loading and parsing."""

import os
import re
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

import yaml

DEFAULT_SEED = 20250101


@dataclass(frozen=True)
class Limits:
    """Resource caps for the expensive computations."""
    max_cosets: int = 4096
    max_order: int = 64
    max_k: int = 12
    max_bar_order: int = 16  # largest group fed to the degree-3 bar complex

    def __post_init__(self):
        for name in ("max_cosets", "max_order", "max_k", "max_bar_order"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"Limit {name} must be a positive integer, got {value!r}")


@dataclass
class FileConfig:
    """Defaults read from a YAML config file."""
    limits: Limits = field(default_factory=Limits)
    seed: int = DEFAULT_SEED
    fmt: str = "text"


@dataclass
class RunConfig:
    """Everything one CLI invocation needs."""
    command: str
    input_path: str | None = None
    matrix_text: str | None = None
    fmt: str = "text"
    seed: int = DEFAULT_SEED
    limits: Limits = field(default_factory=Limits)
    group: str = "artin"
    relator_path: str | None = None
    group_spec: str | None = None
    host: str = "0.0.0.0"
    port: int = 3000

    def __post_init__(self):
        if self.fmt not in ("text", "json-lines"):
            raise ValueError(f"Unknown output format: {self.fmt}")
        if self.group not in ("artin", "coxeter"):
            raise ValueError(f"Unknown group kind: {self.group}")

    def read_matrix_text(self) -> str | None:
        """Inline matrix wins over --input; None when neither was given."""
        if self.matrix_text is not None:
            return self.matrix_text
        if self.input_path == "-":
            return sys.stdin.read()
        if self.input_path is not None:
            return Path(self.input_path).read_text()
        return None

    def read_relator_text(self) -> str:
        if self.relator_path is None:
            raise ValueError("no relator-product file given")
        return Path(self.relator_path).read_text()


def _substitute_env_vars(value: str) -> str:
    """Replace ${VAR} patterns with environment variable values."""
    pattern = r'\$\{([^}]+)\}'

    def replacer(match: re.Match) -> str:
        var_name = match.group(1)
        env_value = os.environ.get(var_name)
        if env_value is None:
            raise ValueError(f"Environment variable not set: {var_name}")
        return env_value

    return re.sub(pattern, replacer, value)


def _substitute_env_vars_recursive(obj):
    """Recursively substitute env vars in a data structure."""
    if isinstance(obj, str):
        return _substitute_env_vars(obj)
    elif isinstance(obj, dict):
        return {k: _substitute_env_vars_recursive(v) for k, v in obj.items()}
    elif isinstance(obj, list):
        return [_substitute_env_vars_recursive(item) for item in obj]
    return obj


def _as_int(value, name: str) -> int:
    # YAML leaves substituted env vars as strings
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"Config value {name} must be an integer, got {value!r}")


def load_config(config_path: str) -> FileConfig:
    """Load and parse configuration from YAML file."""
    path = Path(config_path)
    raw = yaml.safe_load(path.read_text()) or {}

    # Substitute environment variables
    raw = _substitute_env_vars_recursive(raw)

    limits_data = raw.get("limits", {}) or {}
    unknown = set(limits_data) - {"max_cosets", "max_order", "max_k", "max_bar_order"}
    if unknown:
        raise ValueError(f"Unknown limits: {', '.join(sorted(unknown))}")
    limits = Limits(**{k: _as_int(v, f"limits.{k}") for k, v in limits_data.items()})

    seed = _as_int(raw.get("seed", DEFAULT_SEED), "seed")
    fmt = raw.get("format", "text")

    return FileConfig(limits=limits, seed=seed, fmt=fmt)


def build_run_config(args, file_config: FileConfig | None = None) -> RunConfig:
    """Merge parsed command-line arguments over file defaults."""
    base = file_config or FileConfig()

    overrides = {
        "max_cosets": getattr(args, "max_cosets", None),
        "max_order": getattr(args, "max_order", None),
        "max_k": getattr(args, "max_k", None),
    }
    limits = replace(base.limits, **{k: v for k, v in overrides.items() if v is not None})

    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        matrix_text=getattr(args, "matrix", None),
        fmt=getattr(args, "format", None) or base.fmt,
        seed=args.seed if getattr(args, "seed", None) is not None else base.seed,
        limits=limits,
        group=getattr(args, "group", None) or "artin",
        relator_path=getattr(args, "relator_file", None),
        group_spec=getattr(args, "group_spec", None),
        host=getattr(args, "host", None) or "0.0.0.0",
        port=getattr(args, "port", None) or int(os.environ.get("PORT", "3000")),
    )
