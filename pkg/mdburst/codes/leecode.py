from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import galois
import numpy as np

from mdburst.algebra.fields import PrimeExtField, prime_ext_field
from mdburst.core.errors import ConstructionError, ParameterError
from mdburst.core.settings import DEFAULT_CAPS, Caps
from mdburst.lattice.indexing import all_coordinates

Residues = Tuple[int, ...]


@dataclass(frozen=True)
class LeeBchCode:
    p: int
    b: int
    D: int
    s: int
    ext_field: PrimeExtField = field(repr=False)
    locators: Tuple[int, ...]
    A: np.ndarray = field(repr=False, compare=False)
    decode_table: Dict[Residues, Residues] = field(repr=False, compare=False)

    @property
    def r(self) -> int:
        return int(self.A.shape[0])


def lee_degree(p: int, D: int) -> int:
    """Smallest s with p^s >= D + 1."""
    s = 1
    while p**s < D + 1:
        s += 1
    return s


def lee_ball(D: int, radius: int) -> Iterator[Tuple[int, ...]]:
    """Integer vectors of length D with L1 norm at most radius."""
    if D == 0:
        yield ()
        return
    for x in range(-radius, radius + 1):
        for rest in lee_ball(D - 1, radius - abs(x)):
            yield (x,) + rest


def _check_rows(p: int, b: int, D: int, F: PrimeExtField) -> np.ndarray:
    locators = [F.power(i) for i in range(D)]
    rows: List[List[int]] = [[1] * D]
    for k in range(1, b):
        powers = [int(F.element(x) ** k) for x in locators]
        coords = [F.coords(x) for x in powers]
        rows.extend([c[t] for c in coords] for t in range(F.s))
    return np.asarray(rows, dtype=np.int64)


def lee_bch_new(p: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> LeeBchCode:
    if not galois.is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    if b < 2 or D < 1:
        raise ParameterError(f"need b >= 2 and D >= 1, got b={b}, D={D}")
    if p < 2 * b + 1:
        raise ParameterError(f"p={p} violates p >= 2b+1 = {2 * b + 1}")
    s = lee_degree(p, D)
    F = prime_ext_field(p, s)
    raw = _check_rows(p, b, D, F)

    GFp = galois.GF(p)
    reduced = GFp(raw).row_reduce()
    rank = int(np.linalg.matrix_rank(GFp(raw)))
    A = np.asarray(reduced[:rank], dtype=np.int64)

    table: Dict[Residues, Residues] = {}
    count = 0
    for eps in lee_ball(D, b - 1):
        count += 1
        caps.check("patterns", count)
        res = tuple(x % p for x in eps)
        key = tuple(int(x) for x in (A @ np.asarray(res, dtype=np.int64)) % p)
        if key in table:
            raise ConstructionError(
                f"Lee syndrome collision between {table[key]} and {res} (p={p}, b={b}, D={D})"
            )
        table[key] = res
    return LeeBchCode(
        p=p,
        b=b,
        D=D,
        s=s,
        ext_field=F,
        locators=tuple(F.power(i) for i in range(D)),
        A=A,
        decode_table=table,
    )


def lee_syndrome(code: LeeBchCode, v: Sequence[int]) -> Residues:
    vec = np.asarray(v, dtype=np.int64) % code.p
    return tuple(int(x) for x in (code.A @ vec) % code.p)


def lee_decode(code: LeeBchCode, syndrome: Sequence[int]) -> Optional[Residues]:
    """Coset leader of Lee weight <= b-1, or None."""
    return code.decode_table.get(tuple(int(x) % code.p for x in syndrome))


def lift_residues(eps_mod_p: Sequence[int], b: int, p: int) -> Tuple[int, ...]:
    out = []
    for x in eps_mod_p:
        x = int(x) % p
        if x <= b - 1:
            out.append(x)
        elif x >= p - b + 1:
            out.append(x - p)
        else:
            raise ParameterError(f"residue {x} lies in the band [{b}, {p - b}] (p={p}, b={b})")
    if sum(abs(x) for x in out) > b - 1:
        raise ParameterError(f"lifted vector {tuple(out)} has L1 norm above {b - 1}")
    return tuple(out)


def lee_min_distance_bruteforce(code: LeeBchCode, caps: Caps = DEFAULT_CAPS) -> float:
    """Minimum Lee weight over nonzero kernel vectors; math.inf when the kernel is trivial."""
    return kernel_min_lee_weight(code.A, code.p, code.D, caps)


def kernel_min_lee_weight(A: np.ndarray, p: int, D: int, caps: Caps = DEFAULT_CAPS) -> float:
    caps.check("cells", p**D)
    vecs = all_coordinates(p, D)[1:]
    syn = (vecs @ np.asarray(A, dtype=np.int64).T) % p
    kernel = vecs[~syn.any(axis=1)]
    if kernel.shape[0] == 0:
        return math.inf
    return int(np.minimum(kernel, p - kernel).sum(axis=1).min())
