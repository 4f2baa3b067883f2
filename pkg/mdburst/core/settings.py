from __future__ import annotations

from dataclasses import dataclass, field

from mdburst.core.errors import CapExceededError


# ----------------------------
# Size caps
# ----------------------------
@dataclass(frozen=True)
class Caps:
    cells: int = 2**20          # side^D for enumeration / brute force
    patterns: int = 2**24       # |E_model| for syndrome tables
    matrix_bits: int = 2**28    # rows * N for materialized H
    field_degree: int = 24      # largest m for GF(2^m) log tables

    def check(self, what: str, value: int) -> None:
        cap = getattr(self, what)
        if value > cap:
            raise CapExceededError(what, value, cap)


@dataclass(frozen=True)
class VerifyConfig:
    samples: int = 10           # random codewords on top of the zero word
    seed: int = 0
    workers: int = 1


@dataclass(frozen=True)
class MdbConfig:
    caps: Caps = field(default_factory=Caps)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    log_level: str = "WARNING"


DEFAULT_CAPS = Caps()
