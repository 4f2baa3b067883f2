from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from mdburst.core.errors import ParameterError

Coordinate = Tuple[int, ...]

# to_value results must stay within a signed 128-bit word
VALUE_LIMIT = 1 << 127


def to_value(i: Sequence[int], q: int) -> int:
    """[i]_q = sum_t i_t q^t, coordinate 0 the least significant digit."""
    if q < 2:
        raise ParameterError(f"radix q={q} must be >= 2")
    v = 0
    for t in reversed(range(len(i))):
        v = v * q + int(i[t])
    if abs(v) >= VALUE_LIMIT:
        raise ParameterError(f"[i]_{q} overflows 128 bits")
    return v


def from_value(v: int, q: int, D: int) -> Coordinate:
    if q < 2:
        raise ParameterError(f"radix q={q} must be >= 2")
    if not 0 <= v < q**D:
        raise ParameterError(f"value {v} outside [0, {q}^{D})")
    out = []
    for _ in range(D):
        v, r = divmod(v, q)
        out.append(r)
    return tuple(out)


def vec_mod(i: Sequence[int], m: int) -> Coordinate:
    if m < 1:
        raise ParameterError(f"modulus {m} must be >= 1")
    return tuple(int(x) % m for x in i)


def vec_div_floor(i: Sequence[int], m: int) -> Coordinate:
    if m < 1:
        raise ParameterError(f"divisor {m} must be >= 1")
    return tuple(int(x) // m for x in i)


def vec_add(i: Sequence[int], j: Sequence[int]) -> Coordinate:
    return tuple(int(x) + int(y) for x, y in zip(i, j))


def vec_sub(i: Sequence[int], j: Sequence[int]) -> Coordinate:
    return tuple(int(x) - int(y) for x, y in zip(i, j))


def in_box(i: Sequence[int], side: int) -> bool:
    return all(0 <= x < side for x in i)


def all_coordinates(side: int, D: int) -> np.ndarray:
    """All cells of [side]^D as rows, in [i]_side order."""
    idx = np.arange(side**D, dtype=np.int64)
    weights = side ** np.arange(D, dtype=np.int64)
    return (idx[:, None] // weights[None, :]) % side
