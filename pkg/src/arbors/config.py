"""Sweep configuration: defaults, optional JSON file, command-line overrides."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

ALL_CHECKS = ("ez", "roots", "involution", "oracles", "halo", "hochschild", "golden", "factorization")


@dataclass
class SweepConfig:
    max_size: int = 8
    guard_elements: int = 200_000
    guard_points: int = 2_000_000
    series_order: int = 10
    jobs: int = 1
    format: str = "json"
    checks: tuple[str, ...] = field(default=ALL_CHECKS)

    def __post_init__(self):
        for name in ("max_size", "guard_elements", "guard_points", "series_order", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.format not in ("json", "text"):
            raise ValueError(f"unknown format {self.format!r}")
        self.checks = tuple(self.checks)
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")

    @classmethod
    def load(cls, path: str | Path | None = None, **overrides) -> "SweepConfig":
        data: dict = {}
        if path is not None:
            data = json.loads(Path(path).read_text())
            if not isinstance(data, dict):
                raise ValueError("config file must hold a JSON object")
        known = {f.name for f in fields(cls)}
        bad = set(data) - known
        if bad:
            raise ValueError(f"unknown config keys: {sorted(bad)}")
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)

    def to_json(self) -> dict:
        out = asdict(self)
        out["checks"] = list(self.checks)
        return out
