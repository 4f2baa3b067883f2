from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import galois
import numpy as np

from mdburst.core.errors import FormatError, ParameterError
from mdburst.lattice.indexing import all_coordinates

log = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class PackingDesign:
    v: int
    block_size: int
    blocks: Tuple[Block, ...]
    _pairs: Dict[FrozenSet[int], int] = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_blocks(cls, v: int, block_size: int, blocks: Sequence[Sequence[int]]) -> "PackingDesign":
        normalized = tuple(tuple(sorted(int(x) for x in blk)) for blk in blocks)
        pairs: Dict[FrozenSet[int], int] = {}
        for ell, blk in enumerate(normalized):
            for u, w in itertools.combinations(blk, 2):
                pairs.setdefault(frozenset((u, w)), ell)
        return cls(v=v, block_size=block_size, blocks=normalized, _pairs=pairs)

    @property
    def D(self) -> int:
        return len(self.blocks)

    def position(self, ell: int, point: int) -> int:
        return self.blocks[ell].index(point)


def trivial_packing(D: int, b: int) -> PackingDesign:
    if D < 1 or b < 1:
        raise ParameterError(f"need D >= 1 and b >= 1, got D={D}, b={b}")
    blocks = [tuple(range(i * b, (i + 1) * b)) for i in range(D)]
    return PackingDesign.from_blocks(D * b, b, blocks)


def smallest_prime_power(b: int) -> int:
    q = max(b, 2)
    while not galois.is_prime_power(q):
        q += 1
    return q


def steiner_block_count(q: int, s: int) -> int:
    """Lines of AG(s, q): q^(s-1) (q^s - 1) / (q - 1)."""
    return q ** (s - 1) * (q**s - 1) // (q - 1)


def steiner_exponent(q: int, D: int) -> int:
    s = 2
    while steiner_block_count(q, s) < D:
        s += 1
    return s


def affine_lines(q: int, s: int) -> List[Block]:
    """All lines of AG(s, q), points labelled by [x]_q, sorted lexicographically."""
    GF = galois.GF(q)
    coords = all_coordinates(q, s)
    weights = q ** np.arange(s, dtype=np.int64)
    P = GF(coords)
    lam = GF(np.arange(q))
    lines = set()
    for d in coords[1:]:
        lead = d[np.flatnonzero(d)[0]]
        if lead != 1:
            continue
        pts = P[:, None, :] + lam[None, :, None] * GF(d)[None, None, :]
        labels = np.sort(np.asarray(pts, dtype=np.int64) @ weights, axis=1)
        lines.update(tuple(int(x) for x in row) for row in labels)
    return sorted(lines)


def steiner_packing(D: int, b: int, s: Optional[int] = None) -> PackingDesign:
    if D < 1 or b < 2:
        raise ParameterError(f"need D >= 1 and b >= 2, got D={D}, b={b}")
    q = smallest_prime_power(b)
    s = steiner_exponent(q, D) if s is None else s
    total = steiner_block_count(q, s)
    if total < D:
        raise ParameterError(f"AG({s},{q}) has {total} lines, fewer than D={D}")
    lines = affine_lines(q, s)
    blocks = [line[:b] for line in lines[:D]]
    log.debug("steiner packing q=%d s=%d: kept %d of %d lines", q, s, D, len(lines))
    return PackingDesign.from_blocks(q**s, b, blocks)


def verify_packing(design: PackingDesign) -> bool:
    seen = set()
    for blk in design.blocks:
        if len(set(blk)) != design.block_size or len(blk) != design.block_size:
            return False
        for pair in itertools.combinations(sorted(blk), 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def pair_to_block(design: PackingDesign, u: int, w: int) -> Optional[int]:
    """Index of the block holding both points, or None."""
    if u == w:
        raise ParameterError("pair_to_block needs two distinct points")
    return design._pairs.get(frozenset((u, w)))


# ----------------------------
# text export
# ----------------------------
def design_to_text(design: PackingDesign) -> str:
    lines = [f"{design.v} {design.block_size} {design.D}"]
    lines += [" ".join(str(x) for x in blk) for blk in design.blocks]
    return "\n".join(lines) + "\n"


def design_from_text(text: str) -> PackingDesign:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 3:
        raise FormatError("design header must be 'v b D'")
    try:
        v, b, D = (int(x) for x in rows[0])
        blocks = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as e:
        raise FormatError(f"non-integer entry in design: {e}") from e
    if len(blocks) != D:
        raise FormatError(f"header announces {D} blocks, found {len(blocks)}")
    for blk in blocks:
        if len(blk) != b or any(not 0 <= x < v for x in blk):
            raise FormatError(f"bad block {blk} for v={v}, b={b}")
    return PackingDesign.from_blocks(v, b, blocks)


def write_design(path: str, design: PackingDesign) -> None:
    Path(path).expanduser().write_text(design_to_text(design))


def read_design(path: str) -> PackingDesign:
    p = Path(path).expanduser()
    if not p.exists():
        raise FileNotFoundError(f"Design file not found: {p}")
    return design_from_text(p.read_text())
