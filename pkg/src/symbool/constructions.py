"""Low-degree annihilator constructions for symmetric functions.

Three builders live here.  A linear system produces (2i+1)-variable
symmetric functions of degree <= i vanishing on weights {0, i+1..2i},
so their support sits in the weight gap {1..i, 2i+1}.  Multiplying such
a solution by the pair products (x_{2i+3}+x_{2i+2})...(x_n+x_{n-1})
shifts that support to {n//2-i+1..n//2, n//2+i+1} on n variables, which
annihilates any trivial-balanced function that is constant across those
weights — the engine behind refute_max_ai.  Finally, because sigma_a
factors into the sigma of a's binary digits, every function whose
coefficient vector avoids the top three power-of-two positions is
killed by the product of (sigma_{2^j} + 1) over the low digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .boolfn import TruthTable, ones_mask, variable_masks
from .gf2kernel import BitMatrix, nullspace_basis
from .symfn import (
    SanfVector,
    SymValueVector,
    expand,
    is_trivial_balanced,
    preceq,
    sanf_to_value,
    sigma,
)


@dataclass(frozen=True)
class GapSystem:
    """The (i+1)x(i+1) GF(2) system over lam(0..i) forcing value 0 on
    weights {0} and {i+1..2i} of a degree-<= i symmetric function on
    2i+1 variables.

    Row order: weight 0 first, then i+1..2i ascending.  solutions is
    the kernel basis and is never empty.
    """

    i: int
    matrix: BitMatrix
    solutions: tuple[int, ...]

    def canonical(self) -> int:
        """Least nonzero solution by the digit tuple (lam(0), ..., lam(i))."""
        best = None
        for pick in range(1, 1 << len(self.solutions)):
            vec = 0
            p = pick
            while p:
                low = p & -p
                vec ^= self.solutions[low.bit_length() - 1]
                p ^= low
            key = tuple((vec >> k) & 1 for k in range(self.i + 1))
            if best is None or key < best[0]:
                best = (key, vec)
        assert best is not None  # solutions is non-empty by construction
        return best[1]


def solve_gap_system(i: int) -> GapSystem:
    """All lam(0..i) whose degree-<= i function on 2i+1 variables is zero
    on weights {0} and {i+1, ..., 2i}."""
    if i < 1:
        raise ValueError(f"gap parameter must be >= 1, got {i}")
    rows = []
    for m in [0, *range(i + 1, 2 * i + 1)]:
        row = 0
        for k in range(i + 1):
            if preceq(k, m):
                row |= 1 << k
        rows.append(row)
    mat = BitMatrix.from_rows(rows, i + 1)
    sols = tuple(nullspace_basis(mat))
    if not sols:
        raise AssertionError("gap system lost its rank deficiency")
    return GapSystem(i, mat, sols)


@dataclass(frozen=True)
class GapAnnihilator:
    """g_part on x_1..x_{2i+1} times the pair products on the remaining
    variables; product is the full n-variable table."""

    n: int
    i: int
    g_part: SymValueVector
    product: TruthTable


def gap_annihilator(n: int, i: int) -> GapAnnihilator:
    """Nonzero degree-<= n//2 function supported only on weights
    {n//2-i+1 .. n//2} and {n//2+i+1}.

    The first factor is the canonical gap-system solution expanded on
    x_1..x_{2i+1} (support weights {1..i, 2i+1}); the second is
    (x_{2i+2}+x_{2i+3}) ... (x_{n-1}+x_n), which is 1 exactly when each
    pair contributes one set bit — i.e. on weight n//2 - i of the other
    2(n//2 - i) variables.  Empty pair product (i = n//2) is constant 1.
    """
    if n % 2 == 0 or n < 3:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    if not 1 <= i <= n // 2:
        raise ValueError(f"gap parameter must be in 1..{n // 2}, got {i}")
    lam = SanfVector(2 * i + 1, solve_gap_system(i).canonical())
    g_part = sanf_to_value(lam)
    bits = expand(g_part).bits
    width = 1 << (2 * i + 1)
    total = 1 << n
    while width < total:  # g depends on the low 2i+1 variables only
        bits |= bits << width
        width <<= 1
    vm = variable_masks(n)
    for a in range(2 * i + 1, n - 1, 2):
        bits &= vm[a] ^ vm[a + 1]
    if not bits:
        raise AssertionError("gap product vanished")
    return GapAnnihilator(n, i, g_part, TruthTable(n, bits))


def refute_max_ai(vec: SymValueVector) -> Optional[tuple[TruthTable, int]]:
    """Degree-<= n//2 annihilator certifying immunity below (n+1)/2, or
    None when vec is one of the majority pair.

    Returns (annihilator, side): the annihilator kills f + side.  Let i
    be the length of the run of equal values ending at weight m = n//2
    and a their shared value.  For a non-majority vector i <= m, and
    the gap product for i is supported on weights m-i+1..m (value a,
    inside the run) and m+i+1 (mirror of the broken weight m-i, value
    (a+1)+1 = a), so f + a vanishes on all of them.
    """
    n = vec.n
    if n % 2 == 0:
        raise ValueError(f"defined for odd n only, got {n}")
    if not is_trivial_balanced(vec):
        raise ValueError("vector is not trivial balanced")
    m = n // 2
    a = vec.bit(m)
    i = 1
    while i <= m and vec.bit(m - i) == a:
        i += 1
    if i > m:
        return None  # constant on weights 0..n//2: the majority pair
    return gap_annihilator(n, i).product, a


def sigma_factorize(n: int, a: int) -> list[int]:
    """Power-of-two parts of a, ascending; the matching sigma tables
    multiply pointwise to the table of sigma_a."""
    if not 1 <= a <= n:
        raise ValueError(f"index must be in 1..{n}, got {a}")
    parts = []
    while a:
        low = a & -a
        parts.append(low)
        a ^= low
    return parts


def max_ai_necessary_condition(lam: SanfVector) -> bool:
    """Whether a coefficient sits at 2^(t-1), 2^t, or 2^t + 2^(t-1),
    where 2^t <= n < 2^(t+1); indices beyond n count as absent.

    Every function with the maximum immunity ceil(n/2) passes; any
    function failing it is annihilated (on the side of its constant
    term) by necessary_condition_annihilator(n), whose degree is below
    ceil(n/2).
    """
    n = lam.n
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    t = n.bit_length() - 1
    for idx in (1 << (t - 1), 1 << t, (1 << t) | (1 << (t - 1))):
        if idx <= n and (lam.lam >> idx) & 1:
            return True
    return False


def necessary_condition_annihilator(n: int) -> TruthTable:
    """The product (sigma_1 + 1)(sigma_2 + 1) ... (sigma_{2^(t-2)} + 1)
    on n variables; constant 1 when t = 1.

    Its degree is 2^(t-1) - 1 < ceil(n/2).  Any sigma_a with a digit
    below 2^(t-1) has a factor sigma_{2^j} with j <= t-2, and
    sigma_{2^j} * (sigma_{2^j} + 1) = 0 — so when the condition fails,
    only the constant term of f survives the product.
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    t = n.bit_length() - 1
    ones = ones_mask(n)
    bits = ones
    for j in range(t - 1):
        bits &= expand(sanf_to_value(sigma(n, 1 << j))).bits ^ ones
    return TruthTable(n, bits)
