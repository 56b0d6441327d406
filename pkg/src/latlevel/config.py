from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_GROUND = "LATLEVEL_MAX_GROUND"
HARD_MAX_GROUND = 128


@dataclass(frozen=True)
class Limits:
    """Size bounds for bitmask ground sets and the brute-force oracles."""

    max_ground: int = 64
    oracle_generators: int = 20
    oracle_faces: int = 14
    standard_monomials: int = 20
    scan: int = 5

    def __post_init__(self):
        if not 1 <= self.max_ground <= HARD_MAX_GROUND:
            raise ValueError(f"max_ground must lie in 1..{HARD_MAX_GROUND}, got {self.max_ground}")


def limits_from_env(max_ground: int | None = None) -> Limits:
    """Explicit argument wins over the environment variable."""
    if max_ground is None:
        raw = os.environ.get(ENV_MAX_GROUND)
        if raw:
            max_ground = int(raw)
    return Limits() if max_ground is None else Limits(max_ground=max_ground)


DEFAULT_LIMITS = Limits()
