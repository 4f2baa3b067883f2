from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, Optional

from mdburst.core.settings import Caps, MdbConfig, VerifyConfig


def _load_toml(config_path: str) -> Dict[str, Any]:
    p = Path(config_path).expanduser()
    if not p.exists():
        raise FileNotFoundError(f"Config file not found: {p}")
    txt = p.read_text()
    try:
        import tomllib  # py>=3.11
        return tomllib.loads(txt)
    except ImportError:
        import toml
        return toml.loads(txt)


def _get(d: Dict[str, Any], *keys: str, default: Any = None) -> Any:
    cur: Any = d
    for k in keys:
        if not isinstance(cur, dict) or k not in cur:
            return default
        cur = cur[k]
    return cur


def read_config(config_path: Optional[str] = None) -> MdbConfig:
    """Read an mdburst TOML file; missing keys keep their defaults."""
    cfg = MdbConfig()
    if config_path is None:
        return cfg
    data = _load_toml(config_path)

    caps = Caps(
        cells=int(_get(data, "caps", "cells", default=cfg.caps.cells)),
        patterns=int(_get(data, "caps", "patterns", default=cfg.caps.patterns)),
        matrix_bits=int(_get(data, "caps", "matrix_bits", default=cfg.caps.matrix_bits)),
        field_degree=int(_get(data, "caps", "field_degree", default=cfg.caps.field_degree)),
    )
    verify = VerifyConfig(
        samples=int(_get(data, "verify", "samples", default=cfg.verify.samples)),
        seed=int(_get(data, "verify", "seed", default=cfg.verify.seed)),
        workers=int(_get(data, "verify", "workers", default=cfg.verify.workers)),
    )
    log_level = str(_get(data, "logging", "level", default=cfg.log_level)).upper()
    return MdbConfig(caps=caps, verify=verify, log_level=log_level)


def with_overrides(
    cfg: MdbConfig,
    *,
    cap_cells: Optional[int] = None,
    cap_patterns: Optional[int] = None,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    workers: Optional[int] = None,
) -> MdbConfig:
    caps = cfg.caps
    if cap_cells is not None:
        caps = replace(caps, cells=int(cap_cells))
    if cap_patterns is not None:
        caps = replace(caps, patterns=int(cap_patterns))
    verify = cfg.verify
    if seed is not None:
        verify = replace(verify, seed=int(seed))
    if samples is not None:
        verify = replace(verify, samples=int(samples))
    if workers is not None:
        verify = replace(verify, workers=int(workers))
    return replace(cfg, caps=caps, verify=verify)
