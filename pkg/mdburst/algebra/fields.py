from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, List, Sequence, Tuple

import galois
import numpy as np

from mdburst.core.errors import ConstructionError, ParameterError
from mdburst.core.settings import DEFAULT_CAPS

# Lexicographically smallest primitive polynomial of each degree, as a bit
# mask with bit k holding the coefficient of x^k (index = degree m).
PRIMITIVE_POLYS: Tuple[int, ...] = (
    0,
    0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D,
    0x211, 0x409, 0x805, 0x1053, 0x201B, 0x402B, 0x8003, 0x1002D,
    0x20009, 0x40027, 0x80027, 0x100009, 0x200005, 0x400003, 0x800021, 0x100001B,
)


# ----------------------------
# GF(2^m)
# ----------------------------
@dataclass(frozen=True)
class BinaryExtField:
    """GF(2^m) in polynomial basis with alpha = x and full log tables."""

    m: int
    modulus: int
    log_table: np.ndarray = field(repr=False, compare=False)
    antilog_table: np.ndarray = field(repr=False, compare=False)
    _log: List[int] = field(repr=False, compare=False)
    _exp: List[int] = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return 1 << self.m

    @property
    def order(self) -> int:
        """Multiplicative order of alpha, 2^m - 1."""
        return (1 << self.m) - 1

    @property
    def alpha(self) -> int:
        return self._exp[1 % self.order]

    def exp(self, k: int) -> int:
        """alpha^k for any integer k, negative included."""
        return self._exp[k % self.order]

    def dlog(self, x: int) -> int:
        if x == 0:
            raise ParameterError("discrete log of 0 is undefined")
        return self._log[x]

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % self.order]

    def div(self, x: int, y: int) -> int:
        if y == 0:
            raise ZeroDivisionError("division by zero in GF(2^m)")
        if x == 0:
            return 0
        return self._exp[(self._log[x] - self._log[y]) % self.order]

    def inv(self, x: int) -> int:
        return self.div(1, x)

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % self.order]


def _build_tables(m: int, modulus: int) -> Tuple[List[int], List[int]]:
    order = (1 << m) - 1
    top = 1 << m
    exp = [0] * order
    log = [0] * (1 << m)
    x = 1
    for k in range(order):
        exp[k] = x
        log[x] = k
        x <<= 1
        if x & top:
            x ^= modulus
    # the generator must return to 1 exactly after 2^m - 1 steps
    if x != 1 or len(set(exp)) != order:
        raise ConstructionError(f"modulus {modulus:#x} is not primitive for m={m}")
    return log, exp


@lru_cache(maxsize=None)
def binary_ext_field(m: int, max_degree: int = DEFAULT_CAPS.field_degree) -> BinaryExtField:
    if not 1 <= m <= min(max_degree, len(PRIMITIVE_POLYS) - 1):
        raise ParameterError(f"field degree m={m} outside [1, {min(max_degree, len(PRIMITIVE_POLYS) - 1)}]")
    modulus = PRIMITIVE_POLYS[m]
    log, exp = _build_tables(m, modulus)
    return BinaryExtField(
        m=m,
        modulus=modulus,
        log_table=np.asarray(log, dtype=np.int64),
        antilog_table=np.asarray(exp, dtype=np.int64),
        _log=log,
        _exp=exp,
    )


def ff_add(f: BinaryExtField, x: int, y: int) -> int:
    return f.add(x, y)


def ff_mul(f: BinaryExtField, x: int, y: int) -> int:
    return f.mul(x, y)


def ff_pow(f: BinaryExtField, x: int, e: int) -> int:
    return f.pow(x, e)


def ff_inv(f: BinaryExtField, x: int) -> int:
    return f.inv(x)


def dlog(f: BinaryExtField, x: int) -> int:
    return f.dlog(x)


def bits_needed(count: int) -> int:
    """Smallest m with 2^m >= count, i.e. ceil(log2(count))."""
    if count <= 1:
        return 0
    return (count - 1).bit_length()


# ----------------------------
# GF(p) and GF(p^s)
# ----------------------------
@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        if self.p < 3 or not galois.is_prime(self.p):
            raise ParameterError(f"p={self.p} is not an odd prime")

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def neg(self, x: int) -> int:
        return (-x) % self.p

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(x, -1, self.p)


@dataclass(frozen=True)
class PrimeExtField:
    """GF(p^s) realized with galois, modulus the smallest irreducible polynomial."""

    p: int
    s: int
    modulus: Any = field(compare=False)
    gamma: int = 0
    gf: Any = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.p**self.s - 1

    def element(self, x: int) -> Any:
        return self.gf(x)

    def power(self, k: int) -> int:
        """Integer representation of gamma^k."""
        return int(self.gf(self.gamma) ** (k % self.order))

    def coords(self, x: int) -> Tuple[int, ...]:
        """Coordinates of x over F_p, constant coefficient first."""
        return tuple((int(x) // self.p**t) % self.p for t in range(self.s))


@lru_cache(maxsize=None)
def prime_ext_field(p: int, s: int) -> PrimeExtField:
    if not galois.is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    if s < 1:
        raise ParameterError(f"extension degree s={s} must be >= 1")
    if s == 1:
        gf = galois.GF(p)
        modulus = gf.irreducible_poly
    else:
        modulus = galois.irreducible_poly(p, s, method="min")
        gf = galois.GF(p**s, irreducible_poly=modulus)
    order = p**s - 1
    gamma = next(
        (x for x in range(1, p**s) if int(gf(x).multiplicative_order()) == order),
        None,
    )
    if gamma is None:
        raise ConstructionError(f"no primitive element found in GF({p}^{s})")
    return PrimeExtField(p=p, s=s, modulus=modulus, gamma=gamma, gf=gf)


# ----------------------------
# Lee metric
# ----------------------------
def lee_value(a: int, p: int) -> int:
    if not 0 <= a < p:
        raise ParameterError(f"residue {a} outside [0, {p})")
    return min(a, p - a)


def lee_weight(v: Sequence[int], p: int) -> int:
    arr = np.asarray(v, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= p):
        raise ParameterError(f"vector entries must lie in [0, {p})")
    return int(np.minimum(arr, p - arr).sum())
