"""Bit-packed dense linear algebra over GF(2).

Matrices are stored row-major, one Python int per row; bit ``j`` of a row
is the entry in column ``j``.  Arbitrary-precision ints make a row XOR a
single machine-level operation regardless of width, which is all Gaussian
elimination needs.  Everything here is value-semantic: no operation
mutates its input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class BitMatrix:
    """An ``rows x cols`` matrix over GF(2) with int-packed rows.

    Bits of each row beyond ``cols`` must be zero; empty (0 x c or r x 0)
    matrices are legal.
    """

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row has bits set beyond the column count")

    @classmethod
    def from_rows(cls, rows: Iterable[int], cols: int) -> "BitMatrix":
        data = tuple(rows)
        return cls(len(data), cols, data)

    def row(self, i: int) -> int:
        return self.data[i]

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def mul_vec(self, x: int) -> int:
        """Matrix-vector product; bit ``i`` of the result is row_i . x."""
        out = 0
        for i, r in enumerate(self.data):
            out |= ((r & x).bit_count() & 1) << i
        return out


class Gf2Eliminator:
    """Incremental Gaussian elimination with dependency tracking.

    Vectors are inserted one at a time.  An insertion either extends the
    stored independent set (returns None) or reduces to zero, in which
    case the returned int has bit ``k`` set for every previously inserted
    vector in the unique combination summing to the new one (bit for the
    new vector included).  Because the stored pivots are independent, the
    combination is unique, so results do not depend on anything but the
    insertion order.
    """

    def __init__(self):
        self._pivots: dict[int, tuple[int, int]] = {}
        self.inserted = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def insert(self, vec: int) -> Optional[int]:
        combo = 1 << self.inserted
        self.inserted += 1
        pivots = self._pivots
        while vec:
            lead = (vec & -vec).bit_length() - 1
            entry = pivots.get(lead)
            if entry is None:
                pivots[lead] = (vec, combo)
                return None
            vec ^= entry[0]
            combo ^= entry[1]
        return combo

    def reduces_to_zero(self, vec: int) -> bool:
        """Probe membership in the current span without inserting."""
        pivots = self._pivots
        while vec:
            lead = (vec & -vec).bit_length() - 1
            entry = pivots.get(lead)
            if entry is None:
                return False
            vec ^= entry[0]
        return True


def rank(m: BitMatrix) -> int:
    """GF(2) rank of ``m``."""
    pivots: dict[int, int] = {}
    for row in m.data:
        while row:
            lead = (row & -row).bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            row ^= p
    return len(pivots)


def transpose(m: BitMatrix) -> BitMatrix:
    out = [0] * m.cols
    for i, row in enumerate(m.data):
        bit = 1 << i
        while row:
            low = row & -row
            out[low.bit_length() - 1] |= bit
            row ^= low
    return BitMatrix(m.cols, m.rows, tuple(out))


def nullspace_basis(m: BitMatrix) -> list[int]:
    """Basis of ``{x : m.x = 0}`` in reduced echelon form over the free columns.

    Columns of ``m`` are fed in ascending order to an eliminator; each
    dependent column yields exactly the reduced-echelon kernel vector
    whose free column is that column's index, so the basis comes out
    ordered by ascending free-column index.  Size is cols - rank(m).
    """
    elim = Gf2Eliminator()
    basis = []
    for col_vec in transpose(m).data:
        combo = elim.insert(col_vec)
        if combo is not None:
            basis.append(combo)
    return basis


def _reduced_pivot_rows(rows: Iterable[int]) -> dict[int, int]:
    """Reduced row-echelon pivots: leading column -> fully reduced row."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            lead = (row & -row).bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            row ^= p
    # Back-substitute so every pivot row is zero in the other pivot columns.
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        scan = c + 1
        while True:
            rest = row >> scan
            if not rest:
                break
            c2 = scan + (rest & -rest).bit_length() - 1
            p2 = pivots.get(c2)
            if p2 is not None:
                row ^= p2
            scan = c2 + 1
        pivots[c] = row
    return pivots


def solve(m: BitMatrix, b: int) -> Optional[int]:
    """One solution of ``m.x = b`` (free variables zero), or None.

    ``b`` is a length-``rows`` bit vector; bit ``i`` is the right-hand
    side of row ``i``.
    """
    if b < 0 or b >> m.rows:
        raise ValueError("right-hand side length does not match the row count")
    aug = (m.data[i] | (((b >> i) & 1) << m.cols) for i in range(m.rows))
    pivots = _reduced_pivot_rows(aug)
    if m.cols in pivots:
        return None
    x = 0
    rhs_bit = m.cols
    for c, row in pivots.items():
        if (row >> rhs_bit) & 1:
            x |= 1 << c
    return x
