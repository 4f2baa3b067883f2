from __future__ import annotations

import logging
import weakref
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Sequence, Tuple

from mdburst.codes.bch2 import Bch2Kind, bch2_decode, column_pair_decode
from mdburst.codes.constructions import BurstCode, Variant
from mdburst.codes.designs import pair_to_block
from mdburst.codes.leecode import lee_decode, lift_residues
from mdburst.codes.words import ArrayWord, _word_bits
from mdburst.core.errors import ConstructionError, ParameterError
from mdburst.core.settings import DEFAULT_CAPS, Caps
from mdburst.lattice.indexing import Coordinate, from_value, to_value, vec_add
from mdburst.lattice.models import ErrorPattern, ModelKind, b_close, count_model, enumerate_errors

log = logging.getLogger(__name__)


class OutcomeKind(str, Enum):
    NO_ERROR = "no-error"
    SINGLE = "single"
    DOUBLE = "double"
    UNCORRECTABLE = "uncorrectable"


@dataclass(frozen=True)
class DecodeOutcome:
    kind: OutcomeKind
    positions: Tuple[Coordinate, ...] = ()

    @classmethod
    def from_pattern(cls, pattern: ErrorPattern) -> "DecodeOutcome":
        kind = (OutcomeKind.NO_ERROR, OutcomeKind.SINGLE, OutcomeKind.DOUBLE)[pattern.weight]
        return cls(kind, pattern.positions)

    @property
    def corrected(self) -> bool:
        return self.kind is not OutcomeKind.UNCORRECTABLE

    @property
    def pattern(self) -> Optional[ErrorPattern]:
        return ErrorPattern(self.positions) if self.corrected else None

    def __str__(self) -> str:
        if not self.positions:
            return self.kind.value
        cells = " ".join("(" + ",".join(str(x) for x in p) + ")" for p in self.positions)
        return f"{self.kind.value} {cells}"


NO_ERROR = DecodeOutcome(OutcomeKind.NO_ERROR)
UNCORRECTABLE = DecodeOutcome(OutcomeKind.UNCORRECTABLE)


def _confirm(code: BurstCode, cells: Sequence[Sequence[int]], s: int) -> DecodeOutcome:
    """Accept candidate cells only if they lie in the array, are b-close and reproduce s."""
    cells = [tuple(int(x) for x in c) for c in cells]
    if any(not all(0 <= x < code.side for x in c) for c in cells):
        return UNCORRECTABLE
    if len(cells) == 2:
        if cells[0] == cells[1] or not b_close(cells[0], cells[1], code.spec.burst_model):
            return UNCORRECTABLE
    if code.syndrome_of_cells(cells) != s:
        return UNCORRECTABLE
    return DecodeOutcome.from_pattern(ErrorPattern.of(*cells))


def _digits(v: int, q: int, D: int) -> Optional[Coordinate]:
    if not 0 <= v < q**D:
        return None
    return from_value(v, q, D)


def _wrap_offset(d: int, crossed: int, q: int) -> Optional[int]:
    """Offset between two cells whose residues differ by d, given whether they sit in different tiles."""
    if not crossed:
        return d
    if d == 0:
        return None
    return d + q if d < 0 else d - q


# ----------------------------
# L-infinity
# ----------------------------
def decode_linf_syndrome(code: BurstCode, s: int, swap_roles: bool = False) -> DecodeOutcome:
    if s == 0:
        return NO_ERROR
    spec = code.spec
    n, b, D = spec.n, spec.b, spec.D
    bch, alpha = code.parts["bch"], code.parts["alpha"]
    basic = spec.variant is Variant.BASIC
    seg = code.split(s)
    s2, s3 = seg["s2"], seg["s3"]
    res = bch2_decode(bch, seg["s0"], seg["s1"], parity=seg.get("parity", 0))
    if s3 == 0 or res.kind in (Bch2Kind.ZERO, Bch2Kind.FAIL):
        return UNCORRECTABLE
    binv = None if basic else pow(b, -1, alpha.order)

    if res.kind is Bch2Kind.ONE:
        r = _digits(res.indices[0], b, D)
        if r is None:
            return UNCORRECTABLE
        e = alpha.dlog(s3)
        if basic:
            i = _digits(e, n, D)
        else:
            z = _digits(((e - to_value(r, n)) * binv) % alpha.order, n, D)
            i = None if z is None else tuple(b * zt + rt for zt, rt in zip(z, r))
        return UNCORRECTABLE if i is None else _confirm(code, [i], s)

    t_i, t_j = res.indices[::-1] if swap_roles else res.indices
    r_i, r_j = _digits(t_i, b, D), _digits(t_j, b, D)
    if r_i is None or r_j is None:
        return UNCORRECTABLE
    delta = []
    for t in range(D):
        d = _wrap_offset(r_j[t] - r_i[t], (s2 >> t) & 1, b)
        if d is None:
            return UNCORRECTABLE
        delta.append(d)
    denom = alpha.mul(alpha.exp(to_value(r_i, n)), 1 ^ alpha.exp(to_value(delta, n)))
    if denom == 0:
        return UNCORRECTABLE
    e = alpha.dlog(alpha.div(s3, denom))
    if basic:
        # e = [b z]_n, whose digits are b z_t
        digits = _digits(e, n, D)
        if digits is None or any(x % b for x in digits):
            return UNCORRECTABLE
        z = tuple(x // b for x in digits)
    else:
        z = _digits((e * binv) % alpha.order, n, D)
        if z is None:
            return UNCORRECTABLE
    i = tuple(b * zt + rt for zt, rt in zip(z, r_i))
    return _confirm(code, [i, vec_add(i, delta)], s)


# ----------------------------
# L1
# ----------------------------
def decode_l1_syndrome(code: BurstCode, s: int, swap_roles: bool = False) -> DecodeOutcome:
    if s == 0:
        return NO_ERROR
    spec = code.spec
    n, b, D = spec.n, spec.b, spec.D
    p, r = code.params["p"], code.params["r"]
    bch, lee = code.parts["bch"], code.parts["lee"]
    alpha, gamma = code.parts["alpha"], code.parts["gamma"]
    seg = code.split(s)
    s2, s3, s4 = seg["s2"], seg["s3"], seg["s4"]
    res = bch2_decode(bch, seg["s0"], seg["s1"])
    if s3 == 0 or s4 == 0 or res.kind in (Bch2Kind.ZERO, Bch2Kind.FAIL):
        return UNCORRECTABLE
    pinv = pow(p, -1, alpha.order)

    if res.kind is Bch2Kind.ONE:
        r_i = _digits(gamma.dlog(s3), p, D)
        if r_i is None:
            return UNCORRECTABLE
        z = _digits(((alpha.dlog(s4) - to_value(r_i, n)) * pinv) % alpha.order, n, D)
        if z is None:
            return UNCORRECTABLE
        return _confirm(code, [tuple(p * zt + rt for zt, rt in zip(z, r_i))], s)

    t_i, t_j = res.indices[::-1] if swap_roles else res.indices
    u_i, u_j = _digits(t_i, p, r), _digits(t_j, p, r)
    if u_i is None or u_j is None:
        return UNCORRECTABLE
    eps_mod = lee_decode(lee, [(y - x) % p for x, y in zip(u_i, u_j)])
    if eps_mod is None:
        return UNCORRECTABLE
    try:
        eps = lift_residues(eps_mod, b, p)
    except ParameterError:
        return UNCORRECTABLE
    if not any(eps):
        return UNCORRECTABLE
    eps_bar = []
    for t in range(D):
        d = _wrap_offset(eps[t], (s2 >> t) & 1, p)
        if d is None:
            return UNCORRECTABLE
        eps_bar.append(d)

    g = 1 ^ gamma.exp(to_value(eps_bar, p))
    if g == 0:
        return UNCORRECTABLE
    r_i = _digits(gamma.dlog(gamma.div(s3, g)), p, D)
    if r_i is None:
        return UNCORRECTABLE
    h = alpha.mul(alpha.exp(to_value(r_i, n)), 1 ^ alpha.exp(to_value(eps, n)))
    if h == 0:
        return UNCORRECTABLE
    z = _digits((alpha.dlog(alpha.div(s4, h)) * pinv) % alpha.order, n, D)
    if z is None:
        return UNCORRECTABLE
    i = tuple(p * zt + rt for zt, rt in zip(z, r_i))
    return _confirm(code, [i, vec_add(i, eps)], s)


# ----------------------------
# straight
# ----------------------------
def decode_straight_syndrome(code: BurstCode, s: int, swap_roles: bool = False) -> DecodeOutcome:
    if s == 0:
        return NO_ERROR
    spec = code.spec
    n, b, D = spec.n, spec.b, spec.D
    alpha, A, design = code.parts["alpha"], code.parts["shortened"], code.parts["design"]
    seg = code.split(s)
    s3 = seg["s3"]
    if s3 == 0:
        return UNCORRECTABLE

    if seg["s0"]:
        i = _digits(alpha.dlog(s3), n, D)
        return UNCORRECTABLE if i is None else _confirm(code, [i], s)

    res = column_pair_decode(A, seg["s1"])
    if res.kind is not Bch2Kind.TWO:
        return UNCORRECTABLE
    u, w = res.indices[::-1] if swap_roles else res.indices
    ell = pair_to_block(design, u, w)
    if ell is None or ell >= D:
        return UNCORRECTABLE
    r_u, r_w = design.position(ell, u), design.position(ell, w)
    mu = _wrap_offset(r_w - r_u, seg["s2"], b)
    if mu is None:
        return UNCORRECTABLE
    g = 1 ^ alpha.exp(mu * n**ell)
    if g == 0:
        return UNCORRECTABLE
    i = _digits(alpha.dlog(alpha.div(s3, g)), n, D)
    if i is None or i[ell] % b != r_u:
        return UNCORRECTABLE
    j = tuple(x + mu if t == ell else x for t, x in enumerate(i))
    return _confirm(code, [i, j], s)


# ----------------------------
# syndrome table
# ----------------------------
_TABLES: "weakref.WeakKeyDictionary[BurstCode, Dict[int, ErrorPattern]]" = weakref.WeakKeyDictionary()


def build_syndrome_table(code: BurstCode, caps: Caps = DEFAULT_CAPS) -> Dict[int, ErrorPattern]:
    """Map from syndrome to pattern over the code's whole error model."""
    spec = code.spec
    total = count_model(code.side, spec.b, spec.D, spec.model, caps)
    caps.check("patterns", total)
    table: Dict[int, ErrorPattern] = {}
    for pattern in enumerate_errors(code.side, spec.D, spec.burst_model, caps):
        key = code.syndrome_of_cells(pattern.positions)
        if key in table:
            raise ConstructionError(
                f"syndrome collision in {spec.label()}: {table[key]} vs {pattern}"
            )
        table[key] = pattern
    log.debug("syndrome table for %s: %d entries", spec.label(), len(table))
    return table


def syndrome_table(code: BurstCode, caps: Caps = DEFAULT_CAPS) -> Dict[int, ErrorPattern]:
    table = _TABLES.get(code)
    if table is None:
        table = build_syndrome_table(code, caps)
        _TABLES[code] = table
    return table


def decode_table_syndrome(code: BurstCode, s: int, caps: Caps = DEFAULT_CAPS) -> DecodeOutcome:
    pattern = syndrome_table(code, caps).get(s)
    return UNCORRECTABLE if pattern is None else DecodeOutcome.from_pattern(pattern)


# ----------------------------
# word-level entry points
# ----------------------------
SyndromeDecoder = Callable[..., DecodeOutcome]


def algorithmic_decoder(code: BurstCode) -> Optional[SyndromeDecoder]:
    """Proof-derived decoder for the code's variant; None when only the table applies."""
    v = code.spec.variant
    if v in (Variant.BASIC, Variant.EXTENDED, Variant.EXTENDED_POW2):
        return decode_linf_syndrome
    if v is Variant.LEE:
        return decode_l1_syndrome
    if v is Variant.PACKING:
        return decode_straight_syndrome
    return None


def decode_syndrome(code: BurstCode, s: int, caps: Caps = DEFAULT_CAPS) -> DecodeOutcome:
    fn = algorithmic_decoder(code)
    if fn is None:
        return decode_table_syndrome(code, s, caps)
    return fn(code, s)


def decode_linf(code: BurstCode, received, swap_roles: bool = False) -> DecodeOutcome:
    if code.spec.model is not ModelKind.LINF:
        raise ParameterError(f"decode_linf needs an L-inf code, got {code.spec.label()}")
    return decode_linf_syndrome(code, code.syndrome_of(_word_bits(code, received)), swap_roles)


def decode_l1(code: BurstCode, received, swap_roles: bool = False) -> DecodeOutcome:
    if code.spec.variant is not Variant.LEE:
        raise ParameterError(f"decode_l1 needs the Lee-based L1 code, got {code.spec.label()}")
    return decode_l1_syndrome(code, code.syndrome_of(_word_bits(code, received)), swap_roles)


def decode_straight(code: BurstCode, received, swap_roles: bool = False) -> DecodeOutcome:
    if code.spec.model is not ModelKind.STRAIGHT:
        raise ParameterError(f"decode_straight needs a straight code, got {code.spec.label()}")
    return decode_straight_syndrome(code, code.syndrome_of(_word_bits(code, received)), swap_roles)


def decode_table(code: BurstCode, received, caps: Caps = DEFAULT_CAPS) -> DecodeOutcome:
    return decode_table_syndrome(code, code.syndrome_of(_word_bits(code, received)), caps)


def decode(code: BurstCode, received, caps: Caps = DEFAULT_CAPS) -> DecodeOutcome:
    return decode_syndrome(code, code.syndrome_of(_word_bits(code, received)), caps)


def apply_outcome(code: BurstCode, received: ArrayWord, outcome: DecodeOutcome) -> ArrayWord:
    if not outcome.corrected:
        raise ParameterError("cannot correct an uncorrectable word")
    return received.flipped([code.index(c) for c in outcome.positions])
