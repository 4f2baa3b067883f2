from mdburst.lattice.indexing import (
    Coordinate,
    all_coordinates,
    from_value,
    in_box,
    to_value,
    vec_add,
    vec_div_floor,
    vec_mod,
    vec_sub,
)
from mdburst.lattice.models import (
    BurstModel,
    ErrorPattern,
    ModelKind,
    b_close,
    burst_offsets,
    count_l1,
    count_l1_lower,
    count_linf,
    count_model,
    count_straight,
    enumerate_errors,
    golomb_welch_count,
)

__all__ = [
    "Coordinate",
    "all_coordinates",
    "from_value",
    "in_box",
    "to_value",
    "vec_add",
    "vec_div_floor",
    "vec_mod",
    "vec_sub",
    "BurstModel",
    "ErrorPattern",
    "ModelKind",
    "b_close",
    "burst_offsets",
    "count_l1",
    "count_l1_lower",
    "count_linf",
    "count_model",
    "count_straight",
    "enumerate_errors",
    "golomb_welch_count",
]
