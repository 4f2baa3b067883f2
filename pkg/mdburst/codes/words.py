from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Sequence

import numpy as np

from mdburst.codes.constructions import BurstCode, CodeSpec
from mdburst.core.errors import FormatError, ParameterError


@dataclass(frozen=True)
class ArrayWord:
    """N = side^D binary cells in [i]_side order."""

    side: int
    D: int
    bits: np.ndarray

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits, dtype=np.uint8) & 1
        if bits.shape != (self.side**self.D,):
            raise ParameterError(f"word has {bits.size} bits, expected {self.side}^{self.D}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def zeros(cls, side: int, D: int) -> "ArrayWord":
        return cls(side, D, np.zeros(side**D, dtype=np.uint8))

    @property
    def N(self) -> int:
        return self.side**self.D

    def flipped(self, indices: Sequence[int]) -> "ArrayWord":
        bits = self.bits.copy()
        for k in indices:
            bits[int(k)] ^= 1
        return ArrayWord(self.side, self.D, bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArrayWord):
            return NotImplemented
        return (self.side, self.D) == (other.side, other.D) and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.side, self.D, self.bits.tobytes()))


@dataclass(frozen=True)
class Syndrome:
    value: int
    parts: Dict[str, int]

    @property
    def is_zero(self) -> bool:
        return self.value == 0


def _word_bits(code: BurstCode, word) -> np.ndarray:
    if isinstance(word, ArrayWord):
        if (word.side, word.D) != (code.side, code.D):
            raise ParameterError(
                f"word shape side={word.side} D={word.D} does not match code side={code.side} D={code.D}"
            )
        return word.bits
    return np.asarray(word, dtype=np.uint8)


def syndrome(code: BurstCode, word) -> Syndrome:
    s = code.syndrome_of(_word_bits(code, word))
    return Syndrome(s, code.split(s))


def encode(code: BurstCode, message: Sequence[int]) -> ArrayWord:
    return ArrayWord(code.side, code.D, code.encode_bits(message))


# ----------------------------
# BW1 word files
# ----------------------------
_HEADER = re.compile(r"^BW1\s+side=(\d+)\s+D=(\d+)\s*$")


def word_to_text(word: ArrayWord) -> str:
    n_digits = (word.N + 3) // 4
    padded = np.zeros(4 * n_digits, dtype=np.uint8)
    padded[: word.N] = word.bits
    # least significant bit of each digit comes first
    values = padded.reshape(-1, 4) @ np.array([1, 2, 4, 8], dtype=np.int64)
    digits = "".join(f"{int(v):x}" for v in values)
    return f"BW1 side={word.side} D={word.D}\n{digits}\n"


def word_from_text(text: str) -> ArrayWord:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty word file")
    m = _HEADER.match(lines[0].strip())
    if m is None:
        raise FormatError(f"bad word header: {lines[0]!r}")
    side, D = int(m.group(1)), int(m.group(2))
    N = side**D
    digits = "".join("".join(lines[1:]).split())
    if len(digits) != (N + 3) // 4:
        raise FormatError(f"expected {(N + 3) // 4} hex digits, found {len(digits)}")
    try:
        values = np.array([int(c, 16) for c in digits], dtype=np.int64)
    except ValueError as e:
        raise FormatError(f"non-hex digit in word: {e}") from e
    bits = ((values[:, None] >> np.arange(4)) & 1).astype(np.uint8).reshape(-1)
    if bits[N:].any():
        raise FormatError("padding bits past N must be zero")
    return ArrayWord(side, D, bits[:N])


def write_word(path: str, word: ArrayWord) -> None:
    Path(path).expanduser().write_text(word_to_text(word))


def read_word(path: str) -> ArrayWord:
    p = Path(path).expanduser()
    if not p.exists():
        raise FileNotFoundError(f"Word file not found: {p}")
    return word_from_text(p.read_text())


# ----------------------------
# CodeSpec files
# ----------------------------
_SPEC_KEYS = ("model", "variant", "n", "b", "D", "design")


def spec_to_text(spec: CodeSpec) -> str:
    rows = [
        f"model={spec.model.value}",
        f"variant={spec.variant.value}",
        f"n={spec.n}",
        f"b={spec.b}",
        f"D={spec.D}",
    ]
    if spec.design is not None:
        rows.append(f"design={spec.design}")
    return "\n".join(rows) + "\n"


def spec_from_text(text: str) -> CodeSpec:
    kv: Dict[str, str] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if "=" not in ln:
            raise FormatError(f"expected key=value, got {ln!r}")
        key, value = (x.strip() for x in ln.split("=", 1))
        if key not in _SPEC_KEYS:
            raise FormatError(f"unknown spec key {key!r}")
        kv[key] = value
    missing = [k for k in _SPEC_KEYS[:5] if k not in kv]
    if missing:
        raise FormatError(f"spec is missing keys: {', '.join(missing)}")
    try:
        return CodeSpec(
            model=kv["model"],
            variant=kv["variant"],
            n=int(kv["n"]),
            b=int(kv["b"]),
            D=int(kv["D"]),
            design=kv.get("design"),
        )
    except ValueError as e:
        raise FormatError(f"invalid spec: {e}") from e


def write_spec(path: str, spec: CodeSpec) -> None:
    Path(path).expanduser().write_text(spec_to_text(spec))


def read_spec(path: str) -> CodeSpec:
    p = Path(path).expanduser()
    if not p.exists():
        raise FileNotFoundError(f"Spec file not found: {p}")
    return spec_from_text(p.read_text())
