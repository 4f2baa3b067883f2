from mdburst.core.errors import (
    CapExceededError,
    ConstructionError,
    FormatError,
    MdBurstError,
    ParameterError,
)
from mdburst.core.settings import DEFAULT_CAPS, Caps, MdbConfig, VerifyConfig

__all__ = [
    "CapExceededError",
    "ConstructionError",
    "FormatError",
    "MdBurstError",
    "ParameterError",
    "DEFAULT_CAPS",
    "Caps",
    "MdbConfig",
    "VerifyConfig",
]
