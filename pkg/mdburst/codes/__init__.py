from mdburst.codes.bch2 import (
    Bch2Component,
    Bch2Kind,
    Bch2Result,
    ShortenedBch2Matrix,
    bch2_decode,
    bch2_new,
    column_pair_decode,
    shortened_matrix,
)
from mdburst.codes.constructions import (
    BurstCode,
    CodeSpec,
    Variant,
    build_code,
    build_l1,
    build_l1_b3,
    build_linf,
    build_linf_ext,
    build_linf_ext_pow2,
    build_straight,
)
from mdburst.codes.decoders import (
    DecodeOutcome,
    OutcomeKind,
    apply_outcome,
    decode,
    decode_l1,
    decode_linf,
    decode_straight,
    decode_table,
    syndrome_table,
)
from mdburst.codes.designs import (
    PackingDesign,
    pair_to_block,
    steiner_packing,
    trivial_packing,
    verify_packing,
)
from mdburst.codes.leecode import LeeBchCode, lee_bch_new, lee_decode, lift_residues
from mdburst.codes.words import ArrayWord, Syndrome, encode, read_spec, read_word, syndrome, write_spec, write_word

__all__ = [
    "Bch2Component",
    "Bch2Kind",
    "Bch2Result",
    "ShortenedBch2Matrix",
    "bch2_decode",
    "bch2_new",
    "column_pair_decode",
    "shortened_matrix",
    "BurstCode",
    "CodeSpec",
    "Variant",
    "build_code",
    "build_l1",
    "build_l1_b3",
    "build_linf",
    "build_linf_ext",
    "build_linf_ext_pow2",
    "build_straight",
    "DecodeOutcome",
    "OutcomeKind",
    "apply_outcome",
    "decode",
    "decode_l1",
    "decode_linf",
    "decode_straight",
    "decode_table",
    "syndrome_table",
    "PackingDesign",
    "pair_to_block",
    "steiner_packing",
    "trivial_packing",
    "verify_packing",
    "LeeBchCode",
    "lee_bch_new",
    "lee_decode",
    "lift_residues",
    "ArrayWord",
    "Syndrome",
    "encode",
    "read_spec",
    "read_word",
    "syndrome",
    "write_spec",
    "write_word",
]
