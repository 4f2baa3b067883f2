from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from mdburst.algebra.fields import bits_needed
from mdburst.codes.constructions import CodeSpec, Variant
from mdburst.core.errors import ParameterError

log = logging.getLogger(__name__)


class Side(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class BoundEntry:
    model: str
    label: str
    value: float
    side: Side
    source: str
    applicability: str = ""
    applies: bool = True
    reference_only: bool = False
    asymptotic: bool = False


@dataclass(frozen=True)
class BoundReport:
    b: int
    D: int
    entries: Tuple[BoundEntry, ...]

    def for_model(self, model: str) -> List[BoundEntry]:
        return [e for e in self.entries if e.model == model]

    def consistent(self) -> bool:
        """Every applicable upper value is at least every applicable lower value of its model."""
        for model in {e.model for e in self.entries}:
            live = [e for e in self.for_model(model) if e.applies and not e.asymptotic]
            ups = [e.value for e in live if e.side is Side.UPPER]
            lows = [e.value for e in live if e.side is Side.LOWER]
            if ups and lows and min(ups) < max(lows):
                return False
        return True


def _check(b: int, D: int) -> None:
    if b < 2 or D < 1:
        raise ParameterError(f"bounds need b >= 2 and D >= 1, got b={b}, D={D}")


def _is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


# ----------------------------
# L-infinity
# ----------------------------
def xi_upper_linf_basic(n: int, b: int, D: int) -> int:
    _check(b, D)
    base = 2 * bits_needed(b**D + 1) + D
    return base + 1 if _is_pow2(n) else base


def xi_upper_linf_ext(b: int, D: int) -> float:
    _check(b, D)
    return D * math.log2(2 * b) + 3


def xi_upper_linf_ext_pow2(b: int, D: int) -> float:
    """Extended BCH variant, one bit below the extended bound."""
    return xi_upper_linf_ext(b, D) - 1


def xi_lower_linf(b: int, D: int) -> float:
    _check(b, D)
    return D * math.log2(2 * b - 1) - 2


def linf_lower_threshold(b: int, D: int) -> int:
    return (2 * b - 1) ** (D - 1) * D * (b * b - b)


# ----------------------------
# L1
# ----------------------------
def xi_upper_l1(b: int, D: int) -> float:
    _check(b, D)
    return 2 * b * math.log2(b) + 2 * (b - 1) * math.log2(D + 1) + 4 * b + D + 4


def xi_upper_l1_b3(D: int) -> float:
    _check(3, D)
    return 3 * math.log2(D) + 6


def xi_lower_l1(b: int, D: int) -> float:
    _check(b, D)
    if D >= b - 1:
        return b - 1 + math.log2(math.comb(D, b - 1)) - 3
    return D + math.log2(math.comb(b - 1, D)) - 3


def xi_lower_l1_weak(b: int, D: int) -> float:
    """Closed form obtained from the binomial estimates; never above xi_lower_l1."""
    _check(b, D)
    if D >= b - 1:
        return (b - 1) * (1 + math.log2(D - b + 2) - math.log2(b - 1)) - 3
    return D * (1 + math.log2(b - D) - math.log2(D)) - 3


def xi_lower_l1_entropy(b: int, D: int) -> float:
    """Leading term of the entropy refinement; the vanishing correction is dropped."""
    _check(b, D)
    Z, z = max(D, b - 1), min(D, b - 1)
    zeta = z / Z
    eta = 1 + zeta - math.sqrt(1 + zeta * zeta)
    return Z * (eta + entropy(eta) + zeta * entropy(eta / zeta)) - 3


def l1_lower_threshold(b: int, D: int) -> int:
    return 4 * D * (b - 1)


# ----------------------------
# straight
# ----------------------------
def xi_upper_straight_trivial(b: int, D: int) -> float:
    _check(b, D)
    return 2 * math.log2(b) + 2 * math.log2(D) + 5


def xi_upper_straight_steiner(b: int, D: int) -> float:
    _check(b, D)
    return 4 * math.log2(b - 1) + math.log2(D) + 9


def xi_lower_straight(b: int, D: int, refined: bool = False) -> float:
    _check(b, D)
    return math.log2(b - 1) + math.log2(D) - (1 if refined else 2)


def straight_refined_threshold(b: int, D: int) -> float:
    return D * (b * b - b) / 2


# ----------------------------
# matching bound for a built code
# ----------------------------
def upper_bound_for(spec: CodeSpec) -> Tuple[str, float]:
    """(source, value) of the construction bound that covers this code."""
    b, D = spec.b, spec.D
    v = spec.variant
    if v is Variant.BASIC:
        return "basic L-inf construction", float(xi_upper_linf_basic(spec.n, b, D))
    if v is Variant.EXTENDED:
        return "extended L-inf construction", xi_upper_linf_ext(b, D)
    if v is Variant.EXTENDED_POW2:
        return "extended L-inf construction with extended BCH", xi_upper_linf_ext_pow2(b, D)
    if v is Variant.LEE:
        return "Lee-metric L1 construction", xi_upper_l1(b, D)
    if v is Variant.B3:
        return "L1 construction for b=3", xi_upper_l1_b3(D)
    if spec.design == "steiner":
        return "straight construction, Steiner packing", xi_upper_straight_steiner(b, D)
    return "straight construction, trivial packing", xi_upper_straight_trivial(b, D)


# ----------------------------
# summary table
# ----------------------------
def summary_table(b: int, D: int) -> BoundReport:
    _check(b, D)
    lt, l1t, st = linf_lower_threshold(b, D), l1_lower_threshold(b, D), straight_refined_threshold(b, D)
    E = BoundEntry
    entries = [
        E("linf", "ceil(log2(b+1))", float(bits_needed(b + 1)), Side.UPPER,
          "prior work, one dimension", "D=1 only; tight and shared by every model",
          applies=D == 1, reference_only=True),
        E("linf", "3*ceil(2*log2 b)+3", float(3 * math.ceil(2 * math.log2(b)) + 3), Side.UPPER,
          "prior work, two dimensions", "D=2 only", applies=D == 2, reference_only=True),
        E("linf", "2*ceil(log2(b^D+1))+D+1", float(xi_upper_linf_basic(2, b, D)), Side.UPPER,
          "basic L-inf construction", "n a power of 2; one less otherwise"),
        E("linf", "D*log2(2b)+3", xi_upper_linf_ext(b, D), Side.UPPER,
          "extended L-inf construction", "codewords (bn)^D; gcd(b, 2^m-1) = 1"),
        E("linf", "D*log2(2b)+2", xi_upper_linf_ext_pow2(b, D), Side.UPPER,
          "extended L-inf construction with extended BCH", "b a power of 2",
          applies=_is_pow2(b)),
        E("linf", "D*log2(2b-1)-2", xi_lower_linf(b, D), Side.LOWER,
          "L-inf counting bound", f"n >= {lt}"),
        E("l1", "ceil(log2 D)+1", float(bits_needed(D) + 1), Side.UPPER,
          "prior work, b=2", "b=2 only", applies=b == 2, reference_only=True),
        E("l1", "2b*log2 b+2(b-1)*log2(D+1)+4b+D+4", xi_upper_l1(b, D), Side.UPPER,
          "Lee-metric L1 construction", "codewords (np)^D; gcd(p, 2^m-1) = 1"),
        E("l1", "3*log2 D+6", xi_upper_l1_b3(D), Side.UPPER,
          "L1 construction for b=3", "b=3 only", applies=b == 3),
        E("l1", "z+log2 C(Z,z)-3", xi_lower_l1(b, D), Side.LOWER,
          "L1 counting bound", f"n >= {l1t}; Z=max(D,b-1), z=min(D,b-1)"),
        E("l1", "closed form of the L1 counting bound", xi_lower_l1_weak(b, D), Side.LOWER,
          "L1 counting bound, binomial estimate", f"n >= {l1t}"),
        E("l1", "Z(eta+H(eta)+zeta*H(eta/zeta))-3", xi_lower_l1_entropy(b, D), Side.LOWER,
          "L1 counting bound, entropy form", "asymptotic in max(D,b-1)", asymptotic=True),
        E("straight", "ceil(log2 D)+1", float(bits_needed(D) + 1), Side.UPPER,
          "prior work, b=2", "b=2 only", applies=b == 2, reference_only=True),
        E("straight", "2*log2 b+2*log2 D+5", xi_upper_straight_trivial(b, D), Side.UPPER,
          "straight construction, trivial packing"),
        E("straight", "4*log2(b-1)+log2 D+9", xi_upper_straight_steiner(b, D), Side.UPPER,
          "straight construction, Steiner packing"),
        E("straight", "log2(b-1)+log2 D-2", xi_lower_straight(b, D), Side.LOWER,
          "straight counting bound", "n >= b"),
        E("straight", "log2(b-1)+log2 D-1", xi_lower_straight(b, D, refined=True), Side.LOWER,
          "straight counting bound, refined", f"n >= {st:g}"),
    ]
    log.debug("summary table b=%d D=%d: %d entries", b, D, len(entries))
    return BoundReport(b=b, D=D, entries=tuple(entries))


# ----------------------------
# rendering
# ----------------------------
CSV_COLUMNS = ("model", "label", "side", "value", "source", "applicability")


def _row(e: BoundEntry) -> List[str]:
    note = e.applicability
    if not e.applies:
        note = f"not applicable ({note})" if note else "not applicable"
    if e.reference_only:
        note = f"reference only; {note}"
    return [e.model, e.label, e.side.value, f"{e.value:.4f}", e.source, note]


def render_text(report: BoundReport) -> str:
    rows = [list(CSV_COLUMNS)] + [_row(e) for e in report.entries]
    widths = [max(len(r[k]) for r in rows) for k in range(len(CSV_COLUMNS))]
    head = f"excess redundancy bounds, b={report.b} D={report.D}"
    lines = [head] + ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def render_csv(report: BoundReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for e in report.entries:
        writer.writerow(_row(e))
    return buf.getvalue()
