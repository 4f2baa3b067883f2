from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterator, List, Sequence, Tuple

from mdburst.core.errors import ParameterError
from mdburst.core.settings import DEFAULT_CAPS, Caps
from mdburst.lattice.indexing import Coordinate, from_value, in_box, to_value, vec_add


class ModelKind(str, Enum):
    LINF = "linf"
    L1 = "l1"
    STRAIGHT = "straight"


@dataclass(frozen=True)
class BurstModel:
    kind: ModelKind
    b: int

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ParameterError(f"burst size b={self.b} must be >= 2")
        object.__setattr__(self, "kind", ModelKind(self.kind))


@dataclass(frozen=True)
class ErrorPattern:
    """0, 1 or 2 distinct cells, kept in [i] order."""

    positions: Tuple[Coordinate, ...] = ()

    @classmethod
    def of(cls, *cells: Sequence[int]) -> "ErrorPattern":
        pts = sorted({tuple(int(x) for x in c) for c in cells}, key=lambda c: c[::-1])
        if len(pts) != len(cells):
            raise ParameterError("error pattern positions must be distinct")
        if len(pts) > 2:
            raise ParameterError("error patterns hold at most 2 positions")
        return cls(tuple(pts))

    @property
    def weight(self) -> int:
        return len(self.positions)

    def __str__(self) -> str:
        if not self.positions:
            return "none"
        return " ".join("(" + ",".join(str(x) for x in p) + ")" for p in self.positions)


def _offset_close(delta: Sequence[int], model: BurstModel) -> bool:
    mags = [abs(int(x)) for x in delta]
    if model.kind is ModelKind.LINF:
        return max(mags) < model.b
    total = sum(mags)
    if model.kind is ModelKind.L1:
        return total < model.b
    return total < model.b and sum(1 for x in mags if x) == 1


def b_close(i: Sequence[int], j: Sequence[int], model: BurstModel) -> bool:
    if len(i) != len(j):
        raise ParameterError(f"dimension mismatch: {len(i)} vs {len(j)}")
    return _offset_close([int(x) - int(y) for x, y in zip(i, j)], model)


def burst_offsets(D: int, model: BurstModel, side: int) -> List[Coordinate]:
    """Offsets d with [d]_side > 0 whose endpoints are b-close, sorted by [d]_side."""
    b = model.b
    out = [
        d
        for d in itertools.product(range(-(b - 1), b), repeat=D)
        if any(d) and _offset_close(d, model) and to_value(d, side) > 0
    ]
    out.sort(key=lambda d: to_value(d, side))
    return out


def enumerate_errors(
    n: int, D: int, model: BurstModel, caps: Caps = DEFAULT_CAPS
) -> Iterator[ErrorPattern]:
    """Zero pattern, singletons in [i]_n order, then pairs i < j grouped by i."""
    if n < model.b:
        raise ParameterError(f"side n={n} must be >= b={model.b}")
    if D < 1:
        raise ParameterError(f"dimension D={D} must be >= 1")
    caps.check("cells", n**D)
    offsets = burst_offsets(D, model, n)
    yield ErrorPattern()
    for v in range(n**D):
        yield ErrorPattern((from_value(v, n, D),))
    for v in range(n**D):
        i = from_value(v, n, D)
        for d in offsets:
            j = vec_add(i, d)
            if in_box(j, n):
                yield ErrorPattern((i, j))


def _count_by_offsets(n: int, b: int, D: int, kind: ModelKind) -> int:
    model = BurstModel(kind, b)
    pairs = 0
    for d in burst_offsets(D, model, n):
        prod = 1
        for x in d:
            prod *= max(0, n - abs(x))
        pairs += prod
    return 1 + n**D + pairs


def count_linf(n: int, b: int, D: int) -> int:
    if n < b:
        raise ParameterError(f"side n={n} must be >= b={b}")
    return 1 + n**D + ((2 * n * b - n - b * b + b) ** D - n**D) // 2


def count_straight(n: int, b: int, D: int) -> int:
    if n < b:
        raise ParameterError(f"side n={n} must be >= b={b}")
    return 1 + ((b - 1) * D + 1) * n**D - D * n ** (D - 1) * b * (b - 1) // 2


def count_l1(n: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Exact |E_1| from the per-offset cell counts."""
    if n < b:
        raise ParameterError(f"side n={n} must be >= b={b}")
    caps.check("cells", n**D)
    return _count_by_offsets(n, b, D, ModelKind.L1)


def count_model(n: int, b: int, D: int, kind: ModelKind, caps: Caps = DEFAULT_CAPS) -> int:
    kind = ModelKind(kind)
    if kind is ModelKind.LINF:
        return count_linf(n, b, D)
    if kind is ModelKind.STRAIGHT:
        return count_straight(n, b, D)
    return count_l1(n, b, D, caps)


def golomb_welch_count(b: int, D: int) -> int:
    """Number of integer vectors of length D with L1 norm at most b-1."""
    return sum(2**k * comb(D, k) * comb(b - 1, k) for k in range(min(D, b - 1) + 1))


def count_l1_lower(n: int, b: int, D: int) -> float:
    """Lower estimate of |E_1| from interior cells only."""
    interior = max(0, n - 2 * b + 2)
    return 1 + n**D + 0.5 * interior**D * (golomb_welch_count(b, D) - 1)
