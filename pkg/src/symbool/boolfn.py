"""Boolean functions on up to 20 variables as bit-packed truth tables.

A function is one Python int: bit j of the table is the value at the
point whose variable x_k (1-based) equals bit k-1 of j, so x_1 is the
least significant bit of the point index.  ANF coefficient vectors use
the same packing, bit m giving the coefficient of the monomial
prod_{bit k-1 of m set} x_k.  Annihilators of f are the nonzero
functions vanishing on the support of f; algebraic immunity is the
least degree achieving that for f or its complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .gf2kernel import BitMatrix, Gf2Eliminator, nullspace_basis

# 2^19-row annihilator matrices stay addressable; surveys need far less.
MAX_VARS = 20

_HEX_DIGITS = set("0123456789abcdefABCDEF")


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VARS:
        raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {n}")


@lru_cache(maxsize=None)
def ones_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def variable_masks(n: int) -> tuple[int, ...]:
    """Truth tables of the coordinate functions x_1 .. x_n."""
    _check_n(n)
    total = 1 << n
    out = []
    for k in range(n):
        m = ((1 << (1 << k)) - 1) << (1 << k)  # 2^k zeros then 2^k ones
        width = 1 << (k + 1)
        while width < total:
            m |= m << width
            width <<= 1
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def weight_class_masks(n: int) -> tuple[int, ...]:
    """masks[w] has bit j set iff popcount(j) = w."""
    _check_n(n)
    masks = [0] * (n + 1)
    for j in range(1 << n):
        masks[j.bit_count()] |= 1 << j
    return tuple(masks)


@lru_cache(maxsize=None)
def monomials_by_degree(n: int) -> tuple[tuple[int, ...], ...]:
    """All variable masks grouped by popcount, each group ascending."""
    _check_n(n)
    groups: list[list[int]] = [[] for _ in range(n + 1)]
    for m in range(1 << n):
        groups[m.bit_count()].append(m)
    return tuple(tuple(g) for g in groups)


def graded_monomials(n: int, d: int) -> list[int]:
    """Masks of degree <= d: ascending popcount, ties by mask value."""
    groups = monomials_by_degree(n)
    out: list[int] = []
    for w in range(min(d, n) + 1):
        out.extend(groups[w])
    return out


@lru_cache(maxsize=None)
def monomial_table(n: int, m: int) -> int:
    """Truth table of the monomial with variable mask m (m = 0 is constant 1)."""
    table = ones_mask(n)
    vm = variable_masks(n)
    while m:
        low = m & -m
        table &= vm[low.bit_length() - 1]
        m ^= low
    return table


@dataclass(frozen=True)
class TruthTable:
    """2^n-bit value table; bit j is the value at point j."""

    n: int
    bits: int

    def __post_init__(self):
        _check_n(self.n)
        if self.bits < 0 or self.bits >> (1 << self.n):
            raise ValueError("table does not fit in 2^n bits")

    def __call__(self, point: int) -> int:
        return (self.bits >> point) & 1

    def complement(self) -> "TruthTable":
        return TruthTable(self.n, self.bits ^ ones_mask(self.n))

    def to_hex(self) -> str:
        """Plain hex of the packed table; lowest digit = points 0..3."""
        if self.n < 2:
            raise ValueError("hex format needs at least one full digit (n >= 2)")
        return format(self.bits, f"0{1 << (self.n - 2)}x")

    @classmethod
    def from_hex(cls, s: str) -> "TruthTable":
        if set(s) - _HEX_DIGITS:
            raise ValueError(f"not a hex table: {s!r}")
        digits = len(s)
        if digits == 0 or digits & (digits - 1):
            raise ValueError("hex table length must be a power of two")
        return cls(digits.bit_length() + 1, int(s, 16))


def weight(t: TruthTable) -> int:
    return t.bits.bit_count()


def is_balanced(t: TruthTable) -> bool:
    return t.bits.bit_count() == 1 << (t.n - 1)


def is_symmetric(t: TruthTable) -> bool:
    """True iff equal-popcount points always share a value."""
    for m in weight_class_masks(t.n):
        part = t.bits & m
        if part and part != m:
            return False
    return True


def support_weights(t: TruthTable) -> list[int]:
    """Sorted list of input weights on which t takes the value 1."""
    return [w for w, m in enumerate(weight_class_masks(t.n)) if t.bits & m]


@dataclass(frozen=True)
class AnfCoeffs:
    """Multilinear coefficient vector; bit m = coefficient of monomial m."""

    n: int
    coeffs: int

    def __post_init__(self):
        _check_n(self.n)
        if self.coeffs < 0 or self.coeffs >> (1 << self.n):
            raise ValueError("coefficient vector does not fit in 2^n bits")

    def degree(self) -> int:
        """Max popcount over set masks; 0 for the zero polynomial."""
        masks = weight_class_masks(self.n)
        for w in range(self.n, 0, -1):
            if self.coeffs & masks[w]:
                return w
        return 0


def _moebius_bits(n: int, bits: int) -> int:
    # Butterfly over each variable: positions with bit k set absorb the
    # matching bit-k-clear position, shifted up by 2^k.  Involutive.
    ones = ones_mask(n)
    for k, vm in enumerate(variable_masks(n)):
        bits ^= (bits & (vm ^ ones)) << (1 << k)
    return bits


def moebius(t: TruthTable) -> AnfCoeffs:
    """XOR-subset transform of the table: its ANF coefficients."""
    return AnfCoeffs(t.n, _moebius_bits(t.n, t.bits))


def moebius_inverse(a: AnfCoeffs) -> TruthTable:
    """Same butterfly back to the value table (the transform is its own
    inverse)."""
    return TruthTable(a.n, _moebius_bits(a.n, a.coeffs))


def anf_to_str(a: AnfCoeffs) -> str:
    """Human form like 'x1*x2 + x3 + 1', highest degree first."""
    terms = []
    for m in sorted(range(1 << a.n), key=lambda m: (-m.bit_count(), m)):
        if not (a.coeffs >> m) & 1:
            continue
        if m == 0:
            terms.append("1")
        else:
            terms.append("*".join(f"x{k + 1}" for k in range(a.n) if (m >> k) & 1))
    return " + ".join(terms) if terms else "0"


def permute_variables(t: TruthTable, perm: Sequence[int]) -> TruthTable:
    """Relabel variables; new x_{j+1} reads old variable perm[j] (0-based)."""
    n = t.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of range(n)")
    out = 0
    for p in range(1 << n):
        q = 0
        for j in range(n):
            if (p >> j) & 1:
                q |= 1 << perm[j]
        out |= ((t.bits >> q) & 1) << p
    return TruthTable(n, out)


@dataclass(frozen=True)
class AnnihilatorSpace:
    """All annihilators of degree <= d, as coefficient vectors over a
    fixed monomial list (graded order, ties by mask)."""

    n: int
    d: int
    monomials: tuple[int, ...]
    basis: tuple[int, ...]

    def member_anf(self, coeff_vec: int) -> AnfCoeffs:
        anf = 0
        while coeff_vec:
            low = coeff_vec & -coeff_vec
            anf ^= 1 << self.monomials[low.bit_length() - 1]
            coeff_vec ^= low
        return AnfCoeffs(self.n, anf)

    def member_table(self, coeff_vec: int) -> TruthTable:
        bits = 0
        while coeff_vec:
            low = coeff_vec & -coeff_vec
            bits ^= monomial_table(self.n, self.monomials[low.bit_length() - 1])
            coeff_vec ^= low
        return TruthTable(self.n, bits)


def annihilator_space(f: TruthTable, d: int) -> AnnihilatorSpace:
    """Basis of {g : deg(g) <= d, f*g = 0} in monomial coordinates.

    One constraint row per support point of f (ascending), one column
    per monomial of degree <= d: g annihilates f exactly when g vanishes
    on supp(f), i.e. when its coefficient vector is in the nullspace of
    the evaluation matrix.
    """
    if not 0 <= d <= f.n:
        raise ValueError(f"degree bound must be in 0..{f.n}, got {d}")
    monos = graded_monomials(f.n, d)
    rows = []
    supp = f.bits
    while supp:
        low = supp & -supp
        p = low.bit_length() - 1
        supp ^= low
        row = 0
        for j, m in enumerate(monos):
            if m & p == m:  # monomial evaluates to 1 at point p
                row |= 1 << j
        rows.append(row)
    mat = BitMatrix.from_rows(rows, len(monos))
    return AnnihilatorSpace(f.n, d, tuple(monos), tuple(nullspace_basis(mat)))


@dataclass(frozen=True)
class AiWitness:
    """ai: the immunity; side: the witness annihilates f + side (0 means
    f itself, 1 means its complement); witness: one minimal-degree
    annihilator of that side."""

    ai: int
    side: int
    witness: AnfCoeffs


def algebraic_immunity(f: TruthTable) -> AiWitness:
    """Minimum annihilator degree over f and its complement, with witness.

    Monomial evaluation vectors (monomial table restricted to the side's
    support) are fed in graded order to one eliminator per side; the
    first linear dependency met is a minimal-degree annihilator, and the
    dependency combination read back over the inserted monomials is its
    ANF.  Per degree the side with the smaller support goes first (fewer
    effective constraints), f before its complement on ties, which fixes
    the reported witness deterministically.
    """
    n = f.n
    supports = (f.bits, f.bits ^ ones_mask(n))
    order = sorted((supports[s].bit_count(), s) for s in (0, 1))
    elims = (Gf2Eliminator(), Gf2Eliminator())
    inserted: tuple[list[int], list[int]] = ([], [])
    groups = monomials_by_degree(n)
    for d in range((n + 1) // 2 + 1):
        for _, s in order:
            supp = supports[s]
            elim = elims[s]
            monos = inserted[s]
            for m in groups[d]:
                monos.append(m)
                combo = elim.insert(monomial_table(n, m) & supp)
                if combo is None:
                    continue
                anf = 0
                while combo:
                    low = combo & -combo
                    anf ^= 1 << monos[low.bit_length() - 1]
                    combo ^= low
                return AiWitness(d, s, AnfCoeffs(n, anf))
    raise AssertionError("no annihilator within the ceil(n/2) degree bound")


def brute_force_annihilator_exists(f: TruthTable, d: int) -> bool:
    """Exhaustive oracle: does any nonzero g with deg(g) <= d kill f?

    Enumerates every nonzero coefficient vector over the degree-<= d
    monomials, so it refuses more than 20 of them.
    """
    if not 0 <= d <= f.n:
        raise ValueError(f"degree bound must be in 0..{f.n}, got {d}")
    monos = graded_monomials(f.n, d)
    if len(monos) > 20:
        raise ValueError(f"oracle capped at 20 monomials, got {len(monos)}")
    tables = [monomial_table(f.n, m) for m in monos]
    for pick in range(1, 1 << len(monos)):
        g = 0
        v = pick
        while v:
            low = v & -v
            g ^= tables[low.bit_length() - 1]
            v ^= low
        if g & f.bits == 0:
            return True
    return False
