from mdburst.algebra.fields import (
    PRIMITIVE_POLYS,
    BinaryExtField,
    PrimeExtField,
    PrimeField,
    binary_ext_field,
    bits_needed,
    dlog,
    ff_add,
    ff_inv,
    ff_mul,
    ff_pow,
    lee_value,
    lee_weight,
    prime_ext_field,
)
from mdburst.algebra.gf2 import Gf2Matrix, gf2_rank, gf2_row_reduce

__all__ = [
    "PRIMITIVE_POLYS",
    "BinaryExtField",
    "PrimeExtField",
    "PrimeField",
    "binary_ext_field",
    "bits_needed",
    "dlog",
    "ff_add",
    "ff_inv",
    "ff_mul",
    "ff_pow",
    "lee_value",
    "lee_weight",
    "prime_ext_field",
    "Gf2Matrix",
    "gf2_rank",
    "gf2_row_reduce",
]
