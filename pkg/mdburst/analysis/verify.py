from __future__ import annotations

import csv
import io
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from mdburst.analysis.bounds import upper_bound_for, xi_upper_linf_basic
from mdburst.codes.constructions import BurstCode, Variant
from mdburst.codes.decoders import (
    DecodeOutcome,
    algorithmic_decoder,
    decode,
    decode_table_syndrome,
    syndrome_table,
)
from mdburst.codes.designs import PackingDesign, verify_packing
from mdburst.codes.leecode import lee_bch_new, lee_min_distance_bruteforce
from mdburst.codes.words import ArrayWord, encode
from mdburst.core.errors import ConstructionError
from mdburst.core.settings import DEFAULT_CAPS, Caps, VerifyConfig
from mdburst.lattice.models import (
    BurstModel,
    ErrorPattern,
    ModelKind,
    count_l1,
    count_l1_lower,
    count_linf,
    count_model,
    count_straight,
    enumerate_errors,
)

log = logging.getLogger(__name__)

Decoder = Callable[[BurstCode, ArrayWord], DecodeOutcome]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    examined: int = 0
    seconds: float = 0.0
    counterexample: Optional[str] = None
    detail: str = ""


@dataclass
class VerifyReport:
    subject: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class _Timer:
    def __enter__(self) -> "_Timer":
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.seconds = time.perf_counter() - self.t0


def _patterns(code: BurstCode, caps: Caps) -> List[ErrorPattern]:
    spec = code.spec
    caps.check("patterns", count_model(code.side, spec.b, spec.D, spec.model, caps))
    return list(enumerate_errors(code.side, spec.D, spec.burst_model, caps))


# ----------------------------
# syndrome distinctness
# ----------------------------
def verify_syndrome_distinctness(code: BurstCode, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    with _Timer() as t:
        seen: Dict[int, ErrorPattern] = {}
        bad = None
        patterns = _patterns(code, caps)
        for pattern in patterns:
            s = code.syndrome_of_cells(pattern.positions)
            if s in seen:
                bad = f"{seen[s]} and {pattern} share syndrome {s:#x}"
                break
            seen[s] = pattern
    return CheckResult("syndrome-distinctness", bad is None, len(seen), t.seconds, bad)


# ----------------------------
# decoder completeness
# ----------------------------
def sample_codewords(code: BurstCode, samples: int, seed: int) -> List[ArrayWord]:
    """The zero word followed by `samples` seeded random codewords."""
    rng = np.random.default_rng(seed)
    words = [ArrayWord.zeros(code.side, code.D)]
    for _ in range(samples):
        words.append(encode(code, rng.integers(0, 2, size=code.k)))
    return words


def _sweep(
    code: BurstCode, decoder: Decoder, patterns: Sequence[ErrorPattern], words: Sequence[ArrayWord]
) -> Tuple[int, Optional[str]]:
    examined = 0
    for w_idx, c in enumerate(words):
        for pattern in patterns:
            received = c.flipped([code.index(p) for p in pattern.positions])
            out = decoder(code, received)
            examined += 1
            if out.positions != pattern.positions or not out.corrected:
                return examined, f"codeword #{w_idx}: injected {pattern}, decoded {out}"
    return examined, None


def _chunks(items: Sequence, k: int) -> List[Sequence]:
    k = max(1, min(k, len(items)))
    size = math.ceil(len(items) / k)
    return [items[i : i + size] for i in range(0, len(items), size)]


def verify_decoder(
    code: BurstCode,
    decoder: Optional[Decoder] = None,
    samples: int = 10,
    seed: int = 0,
    workers: int = 1,
    caps: Caps = DEFAULT_CAPS,
) -> CheckResult:
    decoder = decoder or (lambda c, w: decode(c, w, caps))
    with _Timer() as t:
        patterns = _patterns(code, caps)
        words = sample_codewords(code, samples, seed)
        if algorithmic_decoder(code) is None:
            try:
                syndrome_table(code, caps)
            except ConstructionError as e:
                return CheckResult("decoder-completeness", False, 0, 0.0, str(e))
        parts = _chunks(patterns, workers)
        if len(parts) == 1:
            results = [_sweep(code, decoder, parts[0], words)]
        else:
            with ThreadPoolExecutor(max_workers=len(parts)) as pool:
                results = list(pool.map(lambda chunk: _sweep(code, decoder, chunk, words), parts))
    examined = sum(r[0] for r in results)
    bad = next((r[1] for r in results if r[1] is not None), None)
    detail = f"{len(patterns)} patterns x {len(words)} codewords, seed={seed}"
    return CheckResult("decoder-completeness", bad is None, examined, t.seconds, bad, detail)


# ----------------------------
# decoder oracles
# ----------------------------
def verify_table_agreement(code: BurstCode, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    fn = algorithmic_decoder(code)
    if fn is None:
        return CheckResult("table-agreement", True, detail="table is the only decoder")
    with _Timer() as t:
        bad = None
        try:
            table = syndrome_table(code, caps)
        except ConstructionError as e:
            table, bad = {}, str(e)
        for s, pattern in table.items():
            if fn(code, s) != decode_table_syndrome(code, s, caps):
                bad = f"syndrome {s:#x}: table says {pattern}, decoder says {fn(code, s)}"
                break
    return CheckResult("table-agreement", bad is None, len(table), t.seconds, bad)


def verify_role_swap(code: BurstCode, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    fn = algorithmic_decoder(code)
    if fn is None:
        return CheckResult("role-swap", True, detail="no algorithmic decoder")
    with _Timer() as t:
        bad = None
        examined = 0
        for pattern in _patterns(code, caps):
            if pattern.weight != 2:
                continue
            s = code.syndrome_of_cells(pattern.positions)
            a, b = fn(code, s), fn(code, s, swap_roles=True)
            examined += 1
            if a.positions != b.positions:
                bad = f"{pattern}: roles as given {a}, swapped {b}"
                break
    return CheckResult("role-swap", bad is None, examined, t.seconds, bad)


# ----------------------------
# redundancy
# ----------------------------
def verify_xi_bound(code: BurstCode) -> CheckResult:
    source, bound = upper_bound_for(code.spec)
    xi = code.xi
    detail = f"xi={xi} bound={bound:.4f} ({source})"
    if code.spec.variant is Variant.BASIC:
        exact = xi_upper_linf_basic(code.spec.n, code.spec.b, code.spec.D)
        if xi == exact:
            detail += "; equality holds"
        else:
            detail += f"; strictly below {exact} (rank {code.rank} < {code.rows} rows)"
            log.warning("%s: measured xi %d below the basic construction value %d",
                        code.spec.label(), xi, exact)
    ok = xi <= bound + 1e-9
    return CheckResult("xi-bound", ok, 1, 0.0, None if ok else detail, detail)


def verify_ball_packing(code: BurstCode, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    spec = code.spec
    size = count_model(code.side, spec.b, spec.D, spec.model, caps)
    ok = (1 << code.rank) >= size
    detail = f"rank={code.rank} |E|={size} log2|E|={math.log2(size):.4f}"
    return CheckResult("ball-packing", ok, 1, 0.0, None if ok else detail, detail)


# ----------------------------
# counts, Lee codes, designs
# ----------------------------
def cross_check_counts(n: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    with _Timer() as t:
        enumerated = {
            kind: sum(1 for _ in enumerate_errors(n, D, BurstModel(kind, b), caps)) for kind in ModelKind
        }
        formula = {
            ModelKind.LINF: count_linf(n, b, D),
            ModelKind.L1: count_l1(n, b, D, caps),
            ModelKind.STRAIGHT: count_straight(n, b, D),
        }
        bad = None
        for kind in ModelKind:
            if enumerated[kind] != formula[kind]:
                bad = f"{kind.value}: enumerated {enumerated[kind]}, formula {formula[kind]}"
                break
        e = enumerated
        if bad is None and not e[ModelKind.STRAIGHT] <= e[ModelKind.L1] <= e[ModelKind.LINF]:
            bad = f"nesting violated: {e[ModelKind.STRAIGHT]}, {e[ModelKind.L1]}, {e[ModelKind.LINF]}"
        if bad is None and count_l1_lower(n, b, D) > e[ModelKind.L1]:
            bad = f"L1 lower estimate {count_l1_lower(n, b, D)} exceeds {e[ModelKind.L1]}"
    detail = " / ".join(f"{k.value}={v}" for k, v in enumerated.items())
    return CheckResult("count-cross-check", bad is None, sum(enumerated.values()), t.seconds, bad, detail)


def verify_lee_code(p: int, b: int, D: int, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    with _Timer() as t:
        code = lee_bch_new(p, b, D, caps)
        dist = lee_min_distance_bruteforce(code, caps)
    bad = None
    if dist < 2 * b:
        bad = f"minimum Lee distance {dist} < {2 * b}"
    elif code.r > 1 + (b - 1) * code.s:
        bad = f"redundancy r={code.r} exceeds {1 + (b - 1) * code.s}"
    detail = f"p={p} b={b} D={D} s={code.s} r={code.r} distance={dist}"
    return CheckResult("lee-distance", bad is None, p**D, t.seconds, bad, detail)


def verify_design(design: PackingDesign) -> CheckResult:
    ok = verify_packing(design)
    detail = f"v={design.v} b={design.block_size} blocks={design.D}"
    return CheckResult("packing", ok, design.D, 0.0, None if ok else "a pair lies in two blocks", detail)


# ----------------------------
# suites
# ----------------------------
def run_suite(code: BurstCode, cfg: VerifyConfig = VerifyConfig(), caps: Caps = DEFAULT_CAPS) -> VerifyReport:
    report = VerifyReport(code.spec.label(), cfg.seed)
    report.checks.append(verify_syndrome_distinctness(code, caps))
    report.checks.append(verify_decoder(code, None, cfg.samples, cfg.seed, cfg.workers, caps))
    report.checks.append(verify_table_agreement(code, caps))
    report.checks.append(verify_role_swap(code, caps))
    report.checks.append(verify_xi_bound(code))
    report.checks.append(verify_ball_packing(code, caps))
    if "design" in code.parts:
        report.checks.append(verify_design(code.parts["design"]))
    for c in report.failures():
        log.info("%s failed %s: %s", report.subject, c.name, c.counterexample)
    return report


def fault_injection(
    code: BurstCode, cfg: VerifyConfig = VerifyConfig(samples=0), caps: Caps = DEFAULT_CAPS
) -> Tuple[int, int]:
    """(detected, injected) over zeroing each column in turn."""
    detected = 0
    for k in range(code.N):
        broken = code.with_zeroed_column(k)
        if not verify_syndrome_distinctness(broken, caps).passed:
            detected += 1
            continue
        if not verify_decoder(broken, None, cfg.samples, cfg.seed, 1, caps).passed:
            detected += 1
    return detected, code.N


def verify_fault_detection(code: BurstCode, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    with _Timer() as t:
        detected, total = fault_injection(code, VerifyConfig(samples=0), caps)
    missed = total - detected
    bad = None if missed == 0 else f"{missed} zeroed columns went unnoticed"
    return CheckResult("fault-injection", missed == 0, total, t.seconds, bad, f"detected {detected}/{total}")


# ----------------------------
# rendering
# ----------------------------
CSV_COLUMNS = ("subject", "seed", "check", "result", "examined", "seconds", "counterexample", "detail")


def render_text(report: VerifyReport) -> str:
    lines = [f"verify {report.subject} seed={report.seed}"]
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        line = f"  {status}  {c.name:<22} examined={c.examined:<8} {c.seconds:.3f}s"
        if c.detail:
            line += f"  {c.detail}"
        lines.append(line)
        if c.counterexample and not c.passed:
            lines.append(f"        counterexample: {c.counterexample}")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n"


def render_csv(report: VerifyReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for c in report.checks:
        writer.writerow([
            report.subject,
            report.seed,
            c.name,
            "pass" if c.passed else "fail",
            c.examined,
            f"{c.seconds:.3f}",
            c.counterexample or "",
            c.detail,
        ])
    return buf.getvalue()
