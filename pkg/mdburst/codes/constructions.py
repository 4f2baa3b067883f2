from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from mdburst.algebra.fields import binary_ext_field, bits_needed
from mdburst.algebra.gf2 import Gf2Matrix, gf2_row_reduce
from mdburst.codes.bch2 import bch2_new, shortened_matrix
from mdburst.codes.designs import PackingDesign, steiner_packing, trivial_packing
from mdburst.codes.leecode import lee_bch_new
from mdburst.core.errors import ParameterError
from mdburst.core.settings import DEFAULT_CAPS, Caps
from mdburst.lattice.indexing import Coordinate, all_coordinates, from_value, to_value, vec_mod
from mdburst.lattice.models import BurstModel, ModelKind

log = logging.getLogger(__name__)


class Variant(str, Enum):
    BASIC = "basic"
    EXTENDED = "extended"
    EXTENDED_POW2 = "extended-pow2"
    LEE = "lee"
    B3 = "b3"
    PACKING = "packing"


MODEL_VARIANTS: Dict[ModelKind, Tuple[Variant, ...]] = {
    ModelKind.LINF: (Variant.BASIC, Variant.EXTENDED, Variant.EXTENDED_POW2),
    ModelKind.L1: (Variant.LEE, Variant.B3),
    ModelKind.STRAIGHT: (Variant.PACKING,),
}

DESIGNS = ("trivial", "steiner")


@dataclass(frozen=True)
class CodeSpec:
    model: ModelKind
    variant: Variant
    n: int
    b: int
    D: int
    design: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "model", ModelKind(self.model))
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.variant not in MODEL_VARIANTS[self.model]:
            raise ParameterError(f"variant {self.variant.value} does not belong to model {self.model.value}")
        if self.model is ModelKind.STRAIGHT:
            design = self.design or "trivial"
            if design not in DESIGNS:
                raise ParameterError(f"unknown design {design!r}; expected one of {DESIGNS}")
            object.__setattr__(self, "design", design)
        elif self.design is not None:
            raise ParameterError("a design applies to the straight model only")
        if self.variant is Variant.B3 and self.b != 3:
            raise ParameterError(f"the b3 variant needs b=3, got b={self.b}")

    @property
    def burst_model(self) -> BurstModel:
        return BurstModel(self.model, self.b)

    def label(self) -> str:
        tail = f"/{self.design}" if self.design else ""
        return f"{self.model.value}/{self.variant.value}{tail} n={self.n} b={self.b} D={self.D}"


@dataclass(frozen=True)
class Segment:
    name: str
    start: int
    width: int

    @property
    def mask(self) -> int:
        return (1 << self.width) - 1


def _layout(widths: Sequence[Tuple[str, int]]) -> Tuple[Segment, ...]:
    out = []
    start = 0
    for name, width in widths:
        out.append(Segment(name, start, width))
        start += width
    return tuple(out)


@dataclass(eq=False)
class BurstCode:
    spec: CodeSpec
    side: int
    segments: Tuple[Segment, ...]
    params: Dict[str, int]
    parts: Dict[str, Any] = field(repr=False)
    rule: Callable[[Coordinate], int] = field(repr=False)
    columns: Tuple[int, ...] = field(repr=False)

    # ---- geometry ----
    @property
    def D(self) -> int:
        return self.spec.D

    @property
    def N(self) -> int:
        return self.side**self.spec.D

    @property
    def rows(self) -> int:
        return sum(seg.width for seg in self.segments)

    def index(self, i: Sequence[int]) -> int:
        if len(i) != self.D or any(not 0 <= int(x) < self.side for x in i):
            raise ParameterError(f"cell {tuple(i)} outside [{self.side}]^{self.D}")
        return to_value(i, self.side)

    def coordinate(self, v: int) -> Coordinate:
        return from_value(v, self.side, self.D)

    def column(self, i: Sequence[int]) -> int:
        """Column at cell i straight from the construction rule."""
        return self.rule(tuple(int(x) for x in i))

    def segment(self, name: str) -> Segment:
        for seg in self.segments:
            if seg.name == name:
                return seg
        raise KeyError(name)

    def split(self, s: int) -> Dict[str, int]:
        return {seg.name: (s >> seg.start) & seg.mask for seg in self.segments}

    # ---- syndromes ----
    @cached_property
    def column_array(self) -> Optional[np.ndarray]:
        if self.rows > 64:
            return None
        return np.asarray(self.columns, dtype=np.uint64)

    def syndrome_of(self, bits: np.ndarray) -> int:
        mask = np.asarray(bits, dtype=np.uint8).astype(bool)
        if mask.shape != (self.N,):
            raise ParameterError(f"word length {mask.size} does not match N={self.N}")
        cols = self.column_array
        if cols is not None:
            return int(np.bitwise_xor.reduce(cols[mask]))
        s = 0
        for k in np.flatnonzero(mask):
            s ^= self.columns[int(k)]
        return s

    def syndrome_of_cells(self, cells: Sequence[Sequence[int]]) -> int:
        s = 0
        for c in cells:
            s ^= self.columns[self.index(c)]
        return s

    # ---- linear algebra ----
    @cached_property
    def matrix(self) -> Gf2Matrix:
        return Gf2Matrix.from_columns(self.columns, self.rows)

    @cached_property
    def _reduced(self) -> Tuple[np.ndarray, List[int]]:
        R, pivots = gf2_row_reduce(self.matrix)
        return R.to_dense()[: len(pivots)], pivots

    @property
    def pivots(self) -> List[int]:
        return self._reduced[1]

    @cached_property
    def info_set(self) -> np.ndarray:
        free = np.ones(self.N, dtype=bool)
        free[self.pivots] = False
        return np.flatnonzero(free)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def k(self) -> int:
        return self.N - self.rank

    @property
    def xi(self) -> int:
        """Measured excess redundancy rank(H) - ceil(log2 N)."""
        return self.rank - bits_needed(self.N)

    def encode_bits(self, message: Sequence[int]) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64) & 1
        if msg.shape != (self.k,):
            raise ParameterError(f"message length {msg.size} does not match k={self.k}")
        R, pivots = self._reduced
        word = np.zeros(self.N, dtype=np.uint8)
        free = self.info_set
        word[free] = msg
        if pivots:
            word[pivots] = (R[:, free].astype(np.int64) @ msg) % 2
        return word

    def with_zeroed_column(self, idx: int) -> "BurstCode":
        cols = list(self.columns)
        cols[idx] = 0
        return replace(self, columns=tuple(cols))


def _pack(code_values: Sequence[int], segments: Sequence[Segment]) -> int:
    col = 0
    for value, seg in zip(code_values, segments):
        col |= (value & seg.mask) << seg.start
    return col


def _parity_bits(i: Coordinate, q: int) -> int:
    """Bit t holds floor(i_t / q) mod 2."""
    out = 0
    for t, x in enumerate(i):
        out |= ((x // q) & 1) << t
    return out


def _check_common(n: int, b: int, D: int) -> None:
    if b < 2:
        raise ParameterError(f"burst size b={b} must be >= 2")
    if n < b:
        raise ParameterError(f"side n={n} must satisfy n >= b={b}")
    if D < 1:
        raise ParameterError(f"dimension D={D} must be >= 1")


def _materialize(
    spec: CodeSpec,
    side: int,
    segments: Tuple[Segment, ...],
    params: Dict[str, int],
    parts: Dict[str, Any],
    rule: Callable[[Coordinate], int],
    caps: Caps,
) -> BurstCode:
    N = side**spec.D
    rows = sum(seg.width for seg in segments)
    caps.check("cells", N)
    caps.check("matrix_bits", N * rows)
    cells = all_coordinates(side, spec.D)
    columns = tuple(rule(tuple(int(x) for x in c)) for c in cells)
    code = BurstCode(
        spec=spec, side=side, segments=segments, params=params, parts=parts, rule=rule, columns=columns
    )
    log.info("built %s: N=%d rows=%d", spec.label(), N, rows)
    return code


def _field_for(m: int, caps: Caps):
    if m > caps.field_degree:
        raise ParameterError(f"field degree {m} exceeds cap {caps.field_degree}")
    return binary_ext_field(m, caps.field_degree)


# ----------------------------
# L-infinity
# ----------------------------
def _build_linf_family(n: int, b: int, D: int, variant: Variant, caps: Caps) -> BurstCode:
    _check_common(n, b, D)
    m = bits_needed(n**D + 1)
    alpha_f = _field_for(m, caps)
    side = n if variant is Variant.BASIC else b * n
    if variant is not Variant.BASIC and math.gcd(b, alpha_f.order) != 1:
        raise ParameterError(
            f"gcd(b={b}, 2^m-1={alpha_f.order}) = {math.gcd(b, alpha_f.order)} != 1 for m={m}"
        )

    if variant is Variant.EXTENDED_POW2:
        if b & (b - 1):
            raise ParameterError(f"b={b} is not a power of 2")
        a = D * (b.bit_length() - 1)
        bch = bch2_new(a, extended=True)
        segments = _layout([("parity", 1), ("s0", a), ("s1", a), ("s2", D), ("s3", m)])
    else:
        a = bits_needed(b**D + 1)
        bch = bch2_new(a)
        segments = _layout([("s0", a), ("s1", a), ("s2", D), ("s3", m)])
    _field_for(a, caps)

    def rule(i: Coordinate) -> int:
        x0, x1 = bch.column(to_value(vec_mod(i, b), b))
        values = [x0, x1, _parity_bits(i, b), alpha_f.exp(to_value(i, n))]
        if bch.extended:
            values = [1] + values
        return _pack(values, segments)

    spec = CodeSpec(ModelKind.LINF, variant, n, b, D)
    params = {"m": m, "a": a, "side": side}
    parts = {"alpha": alpha_f, "bch": bch}
    return _materialize(spec, side, segments, params, parts, rule, caps)


def build_linf(n: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> BurstCode:
    return _build_linf_family(n, b, D, Variant.BASIC, caps)


def build_linf_ext(n: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> BurstCode:
    return _build_linf_family(n, b, D, Variant.EXTENDED, caps)


def build_linf_ext_pow2(n: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> BurstCode:
    return _build_linf_family(n, b, D, Variant.EXTENDED_POW2, caps)


# ----------------------------
# L1
# ----------------------------
def smallest_prime_at_least(x: int) -> int:
    return x if galois.is_prime(x) else int(galois.next_prime(x))


def build_l1(n: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> BurstCode:
    _check_common(n, b, D)
    p = smallest_prime_at_least(2 * b + 1)
    m = bits_needed(n**D + 1)
    alpha_f = _field_for(m, caps)
    if math.gcd(p, alpha_f.order) != 1:
        raise ParameterError(f"gcd(p={p}, 2^m-1={alpha_f.order}) != 1 for m={m}")
    lee = lee_bch_new(p, b, D, caps)
    r = lee.r
    a = bits_needed(p**r + 1)
    a_prime = bits_needed(p**D + 1)
    bch = bch2_new(a)
    _field_for(a, caps)
    gamma_f = _field_for(a_prime, caps)
    segments = _layout([("s0", a), ("s1", a), ("s2", D), ("s3", a_prime), ("s4", m)])
    A = lee.A

    def rule(i: Coordinate) -> int:
        res = np.asarray(vec_mod(i, p), dtype=np.int64)
        u = tuple(int(x) for x in (A @ res) % p)
        x0, x1 = bch.column(to_value(u, p))
        values = [
            x0,
            x1,
            _parity_bits(i, p),
            gamma_f.exp(to_value(vec_mod(i, p), p)),
            alpha_f.exp(to_value(i, n)),
        ]
        return _pack(values, segments)

    spec = CodeSpec(ModelKind.L1, Variant.LEE, n, b, D)
    params = {"m": m, "a": a, "a_prime": a_prime, "p": p, "r": r, "s": lee.s, "side": n * p}
    parts = {"alpha": alpha_f, "gamma": gamma_f, "bch": bch, "lee": lee}
    return _materialize(spec, n * p, segments, params, parts, rule, caps)


def build_l1_b3(n: int, D: int, caps: Caps = DEFAULT_CAPS) -> BurstCode:
    if n < 3:
        raise ParameterError(f"side n={n} must satisfy n >= 3")
    if D < 2:
        raise ParameterError(f"dimension D={D} must be >= 2")
    m = bits_needed(n**D + 1)
    alpha_f = _field_for(m, caps)
    a = bits_needed(D + 1)
    A = shortened_matrix(a, D)
    w = bits_needed(D)
    segments = _layout([("s0", 1), ("s1", 2 * a), ("s2", 1), ("s3", w), ("s4", m)])

    def rule(i: Coordinate) -> int:
        s1 = 0
        for ell, x in enumerate(i):
            if x & 1:
                s1 ^= A.columns[ell]
        s3 = 0
        for k in range(w):
            row_sum = sum(x for ell, x in enumerate(i) if (ell >> k) & 1)
            s3 |= ((row_sum // 2) & 1) << k
        values = [1, s1, (sum(i) // 2) & 1, s3, alpha_f.exp(to_value(i, n))]
        return _pack(values, segments)

    spec = CodeSpec(ModelKind.L1, Variant.B3, n, 3, D)
    params = {"m": m, "a": a, "w": w, "side": n}
    parts = {"alpha": alpha_f, "shortened": A}
    return _materialize(spec, n, segments, params, parts, rule, caps)


# ----------------------------
# straight
# ----------------------------
def make_design(D: int, b: int, design: str) -> PackingDesign:
    if design == "trivial":
        return trivial_packing(D, b)
    if design == "steiner":
        return steiner_packing(D, b)
    raise ParameterError(f"unknown design {design!r}")


def build_straight(
    n: int, b: int, D: int, design_choice: str = "trivial", caps: Caps = DEFAULT_CAPS
) -> BurstCode:
    _check_common(n, b, D)
    design = make_design(D, b, design_choice)
    if design.D < D:
        raise ParameterError(f"design supplies {design.D} blocks, need D={D}")
    m = bits_needed(n**D + 1)
    alpha_f = _field_for(m, caps)
    a = bits_needed(design.v + 1)
    _field_for(a, caps)
    A = shortened_matrix(a, design.v)
    segments = _layout([("s0", 1), ("s1", 2 * a), ("s2", 1), ("s3", m)])

    def rule(i: Coordinate) -> int:
        s1 = 0
        for ell, x in enumerate(i):
            s1 ^= A.columns[design.blocks[ell][x % b]]
        values = [1, s1, sum(x // b for x in i) & 1, alpha_f.exp(to_value(i, n))]
        return _pack(values, segments)

    spec = CodeSpec(ModelKind.STRAIGHT, Variant.PACKING, n, b, D, design_choice)
    params = {"m": m, "a": a, "v": design.v, "side": n}
    parts = {"alpha": alpha_f, "shortened": A, "design": design}
    return _materialize(spec, n, segments, params, parts, rule, caps)


def build_code(spec: CodeSpec, caps: Caps = DEFAULT_CAPS) -> BurstCode:
    v = spec.variant
    if v is Variant.BASIC:
        return build_linf(spec.n, spec.b, spec.D, caps)
    if v is Variant.EXTENDED:
        return build_linf_ext(spec.n, spec.b, spec.D, caps)
    if v is Variant.EXTENDED_POW2:
        return build_linf_ext_pow2(spec.n, spec.b, spec.D, caps)
    if v is Variant.LEE:
        return build_l1(spec.n, spec.b, spec.D, caps)
    if v is Variant.B3:
        return build_l1_b3(spec.n, spec.D, caps)
    return build_straight(spec.n, spec.b, spec.D, spec.design or "trivial", caps)
