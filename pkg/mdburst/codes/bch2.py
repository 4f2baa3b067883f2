from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from mdburst.algebra.fields import BinaryExtField, binary_ext_field
from mdburst.core.errors import ConstructionError, ParameterError


class Bch2Kind(str, Enum):
    ZERO = "zero"
    ONE = "one"
    TWO = "two"
    FAIL = "fail"


@dataclass(frozen=True)
class Bch2Result:
    kind: Bch2Kind
    indices: Tuple[int, ...] = ()


ZERO = Bch2Result(Bch2Kind.ZERO)
FAIL = Bch2Result(Bch2Kind.FAIL)


@dataclass(frozen=True)
class Bch2Component:
    """Columns (beta^t, beta^3t) for t in [2^a - 1], or (1, x, x^3) over all x when extended."""

    field: BinaryExtField
    extended: bool = False

    @property
    def a(self) -> int:
        return self.field.m

    @property
    def length(self) -> int:
        return self.field.size if self.extended else self.field.order

    def element(self, t: int) -> int:
        """beta^t, or the element labelled t in the extended family."""
        if not 0 <= t < self.length:
            raise ParameterError(f"column index {t} outside [0, {self.length})")
        return t if self.extended else self.field.exp(t)

    def column(self, t: int) -> Tuple[int, int]:
        x = self.element(t)
        return x, self.field.pow(x, 3)

    def columns(self) -> List[Tuple[int, int]]:
        return [self.column(t) for t in range(self.length)]

    def label(self, x: int) -> int:
        return x if self.extended else self.field.dlog(x)


def bch2_new(a: int, extended: bool = False) -> Bch2Component:
    if a < (1 if extended else 2):
        raise ParameterError(f"BCH field degree a={a} too small")
    return Bch2Component(field=binary_ext_field(a), extended=extended)


def _quadratic_roots(f: BinaryExtField, s0: int, prod: int, with_zero: bool) -> np.ndarray:
    """Roots of X^2 + s0 X + prod by scanning the field."""
    xs = np.arange(0 if with_zero else 1, f.size, dtype=np.int64)
    logs = f.log_table[np.maximum(xs, 1)]
    sq = f.antilog_table[(2 * logs) % f.order]
    lin = f.antilog_table[(logs + f.dlog(s0)) % f.order]
    if with_zero:
        sq = np.where(xs == 0, 0, sq)
        lin = np.where(xs == 0, 0, lin)
    return xs[(sq ^ lin ^ prod) == 0]


def bch2_decode(comp: Bch2Component, s0: int, s1: int, parity: int = 0) -> Bch2Result:
    """Locate at most two columns summing to (s0, s1); parity is the leading row of the extended family."""
    f = comp.field
    if comp.extended and parity:
        if s1 != f.pow(s0, 3):
            return FAIL
        return Bch2Result(Bch2Kind.ONE, (comp.label(s0),))
    if s0 == 0:
        return ZERO if s1 == 0 else FAIL
    if not comp.extended and s1 == f.pow(s0, 3):
        return Bch2Result(Bch2Kind.ONE, (comp.label(s0),))

    # X1 + X2 = s0, X1 X2 = s1/s0 + s0^2
    prod = f.add(f.div(s1, s0), f.mul(s0, s0))
    if prod == 0 and not comp.extended:
        return FAIL
    roots = _quadratic_roots(f, s0, prod, with_zero=comp.extended)
    if roots.size != 2:
        return FAIL
    t1, t2 = sorted(comp.label(int(x)) for x in roots)
    return Bch2Result(Bch2Kind.TWO, (t1, t2))


# ----------------------------
# Shortened matrix with pair lookup
# ----------------------------
@dataclass(frozen=True)
class ShortenedBch2Matrix:
    """Column u packs beta^u in the low a bits and beta^3u in the high a bits."""

    a: int
    v: int
    columns: Tuple[int, ...]
    _lookup: Dict[int, Bch2Result] = field(repr=False, compare=False)

    @property
    def rows(self) -> int:
        return 2 * self.a


def shortened_matrix(a: int, v: int) -> ShortenedBch2Matrix:
    comp = bch2_new(a)
    if not 1 <= v <= comp.length:
        raise ParameterError(f"shortened length v={v} outside [1, 2^{a}-1]")
    cols = tuple(x | (y << a) for x, y in (comp.column(u) for u in range(v)))
    lookup: Dict[int, Bch2Result] = {0: ZERO}

    def put(key: int, res: Bch2Result) -> None:
        if key in lookup:
            raise ConstructionError(f"BCH syndrome collision between {lookup[key]} and {res}")
        lookup[key] = res

    for u in range(v):
        put(cols[u], Bch2Result(Bch2Kind.ONE, (u,)))
    for u in range(v):
        for w in range(u + 1, v):
            put(cols[u] ^ cols[w], Bch2Result(Bch2Kind.TWO, (u, w)))
    return ShortenedBch2Matrix(a=a, v=v, columns=cols, _lookup=lookup)


def column_pair_decode(M: ShortenedBch2Matrix, s: int) -> Bch2Result:
    return M._lookup.get(s, FAIL)
