"""Symmetric Boolean functions in weight-indexed form.

A symmetric function is determined by its value on each input weight —
an (n+1)-bit vector — and its ANF collapses to n+1 coefficients over
the homogeneous functions sigma_i (the XOR of all degree-i monomials).
The two compact forms are XOR-subset transforms of each other over the
binary dominance order: v(i) = XOR of lam(k) for all k whose base-2
digits are dominated by i's, and the same sum inverts itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from .boolfn import TruthTable, is_symmetric, weight_class_masks


def preceq(a: int, b: int) -> bool:
    """Binary-digit dominance: every base-2 digit of a is <= b's.

    Equivalently, C(b, a) is odd (Lucas).
    """
    return a & b == a


def _check_vec(n: int, bits: int) -> None:
    if n < 1:
        raise ValueError(f"variable count must be >= 1, got {n}")
    if bits < 0 or bits >> (n + 1):
        raise ValueError("vector needs exactly n+1 bits")


def _parse_bits(s: str) -> tuple[int, int]:
    if len(s) < 2 or set(s) - {"0", "1"}:
        raise ValueError(f"expected a 0/1 string of length n+1 >= 2, got {s!r}")
    return len(s) - 1, int(s[::-1], 2)


@dataclass(frozen=True)
class SymValueVector:
    """v(i) = function value on every weight-i input; bit i of v is v(i)."""

    n: int
    v: int

    def __post_init__(self):
        _check_vec(self.n, self.v)

    def bit(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise ValueError(f"weight index must be in 0..{self.n}, got {i}")
        return (self.v >> i) & 1

    def bits_str(self) -> str:
        """Left-to-right v(0)..v(n)."""
        return "".join(str((self.v >> i) & 1) for i in range(self.n + 1))

    @classmethod
    def from_bits_str(cls, s: str) -> "SymValueVector":
        return cls(*_parse_bits(s))


@dataclass(frozen=True)
class SanfVector:
    """lam(i) = coefficient of sigma_i; bit i of lam is lam(i)."""

    n: int
    lam: int

    def __post_init__(self):
        _check_vec(self.n, self.lam)

    def bit(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise ValueError(f"coefficient index must be in 0..{self.n}, got {i}")
        return (self.lam >> i) & 1

    def bits_str(self) -> str:
        return "".join(str((self.lam >> i) & 1) for i in range(self.n + 1))

    @classmethod
    def from_bits_str(cls, s: str) -> "SanfVector":
        return cls(*_parse_bits(s))


@lru_cache(maxsize=None)
def _clear_masks(n: int) -> tuple[int, ...]:
    # For each index bit b = 1, 2, 4, ...: the positions 0..n with that
    # bit clear.
    width = n + 1
    masks = []
    b = 1
    while b <= n:
        m = 0
        for start in range(0, width, b << 1):
            m |= ((1 << min(b, width - start)) - 1) << start
        masks.append(m)
        b <<= 1
    return tuple(masks)


def _dominance_transform(bits: int, n: int) -> int:
    """XOR-subset butterfly over the dominance order on 0..n; involutive."""
    b = 1
    for m in _clear_masks(n):
        bits ^= (bits & m) << b
        b <<= 1
    return bits & ((1 << (n + 1)) - 1)


def sanf_to_value(lam: SanfVector) -> SymValueVector:
    """v(i) = XOR of lam(k) over all k dominated by i."""
    return SymValueVector(lam.n, _dominance_transform(lam.lam, lam.n))


def value_to_sanf(vec: SymValueVector) -> SanfVector:
    """Exact inverse of sanf_to_value — the same transform."""
    return SanfVector(vec.n, _dominance_transform(vec.v, vec.n))


def expand(vec: SymValueVector) -> TruthTable:
    """Truth table with bit j = v(popcount(j))."""
    masks = weight_class_masks(vec.n)
    bits = 0
    for i in range(vec.n + 1):
        if (vec.v >> i) & 1:
            bits |= masks[i]
    return TruthTable(vec.n, bits)


def compress(t: TruthTable) -> Optional[SymValueVector]:
    """Weight-indexed form of a symmetric table, None if not symmetric."""
    if not is_symmetric(t):
        return None
    masks = weight_class_masks(t.n)
    v = 0
    for i in range(t.n + 1):
        if t.bits & masks[i]:
            v |= 1 << i
    return SymValueVector(t.n, v)


def sigma(n: int, i: int) -> SanfVector:
    """The XOR of all degree-i monomials on n variables, as coefficients."""
    if not 0 <= i <= n:
        raise ValueError(f"sigma index must be in 0..{n}, got {i}")
    return SanfVector(n, 1 << i)


def sym_degree(lam: SanfVector) -> int:
    """Largest set coefficient index; 0 for the zero vector."""
    return lam.lam.bit_length() - 1 if lam.lam else 0


def sym_weight(vec: SymValueVector) -> int:
    """Support size of the expansion, computed without expanding."""
    return sum(comb(vec.n, i) for i in range(vec.n + 1) if (vec.v >> i) & 1)


def is_trivial_balanced(vec: SymValueVector) -> Optional[bool]:
    """Whether v(i) and v(n-i) always differ.

    Defined for odd n only; even n gets None (falsy) as the distinct
    not-applicable signal.
    """
    n = vec.n
    if n % 2 == 0:
        return None
    v = vec.v
    return all(((v >> i) ^ (v >> (n - i))) & 1 for i in range((n + 1) // 2))


def majority_family(n: int, a: int) -> SymValueVector:
    """Value a up to weight n//2 and a+1 above: the two majority-style
    vectors, always trivial balanced."""
    if n % 2 == 0:
        raise ValueError(f"majority family needs odd n, got {n}")
    if a not in (0, 1):
        raise ValueError(f"a must be 0 or 1, got {a}")
    low = (1 << (n // 2 + 1)) - 1  # weights 0..n//2
    full = (1 << (n + 1)) - 1
    return SymValueVector(n, low if a else full ^ low)
