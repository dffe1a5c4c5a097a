"""Configuration management for the cosmos toolkit."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Any

FORMATS = ("text", "json")
PROBE_SETS = ("default", "minimal")


@dataclass(frozen=True)
class Config:
    """Toolkit configuration loaded from environment variables."""

    dim_bound: int = 3
    budget: int = 1_000_000
    output_format: str = "text"
    log_level: str = "WARNING"
    probe_set: str = "default"

    @classmethod
    def from_env(cls) -> Config:
        """Load configuration from environment variables."""
        return cls(
            dim_bound=int(os.getenv("COSMOS_DIM_BOUND", "3")),
            budget=int(os.getenv("COSMOS_BUDGET", "1000000")),
            output_format=os.getenv("COSMOS_FORMAT", "text"),
            log_level=os.getenv("COSMOS_LOG_LEVEL", "WARNING").upper(),
            probe_set=os.getenv("COSMOS_PROBE_SET", "default"),
        )


def configure(**changes: Any) -> Config:
    """Rebind the global config with the given fields replaced; ``None`` values are ignored."""
    global config
    changes = {key: value for key, value in changes.items() if value is not None}
    if changes.get("output_format", FORMATS[0]) not in FORMATS:
        raise ValueError(f"Unknown output format '{changes['output_format']}'")
    if changes.get("probe_set", PROBE_SETS[0]) not in PROBE_SETS:
        raise ValueError(f"Unknown probe set '{changes['probe_set']}'")
    config = replace(config, **changes)
    return config


# Global config instance
config = Config.from_env()
