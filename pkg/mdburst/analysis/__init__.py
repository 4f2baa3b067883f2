from mdburst.analysis.bounds import (
    BoundEntry,
    BoundReport,
    Side,
    summary_table,
    upper_bound_for,
    xi_lower_l1,
    xi_lower_l1_entropy,
    xi_lower_l1_weak,
    xi_lower_linf,
    xi_lower_straight,
    xi_upper_l1,
    xi_upper_l1_b3,
    xi_upper_linf_basic,
    xi_upper_linf_ext,
    xi_upper_linf_ext_pow2,
    xi_upper_straight_steiner,
    xi_upper_straight_trivial,
)
from mdburst.analysis.verify import (
    CheckResult,
    VerifyReport,
    cross_check_counts,
    fault_injection,
    verify_fault_detection,
    run_suite,
    verify_ball_packing,
    verify_decoder,
    verify_lee_code,
    verify_syndrome_distinctness,
    verify_xi_bound,
)

__all__ = [
    "BoundEntry",
    "BoundReport",
    "Side",
    "summary_table",
    "upper_bound_for",
    "xi_lower_l1",
    "xi_lower_l1_entropy",
    "xi_lower_l1_weak",
    "xi_lower_linf",
    "xi_lower_straight",
    "xi_upper_l1",
    "xi_upper_l1_b3",
    "xi_upper_linf_basic",
    "xi_upper_linf_ext",
    "xi_upper_linf_ext_pow2",
    "xi_upper_straight_steiner",
    "xi_upper_straight_trivial",
    "CheckResult",
    "VerifyReport",
    "cross_check_counts",
    "fault_injection",
    "verify_fault_detection",
    "run_suite",
    "verify_ball_packing",
    "verify_decoder",
    "verify_lee_code",
    "verify_syndrome_distinctness",
    "verify_xi_bound",
]
