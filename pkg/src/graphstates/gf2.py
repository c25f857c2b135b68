"""Exact GF(2) linear algebra on int-bitmask rows.

Vertex subsets are stored as Python ints: bit j-1 corresponds to vertex j,
so the printable string i_1...i_n reads the mask from bit 0 upward.  All
routines are pure and exact; widths are capped at 32 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_WIDTH = 32


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a set of 1-indexed vertices."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-indexed vertices of a bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def mask_to_string(mask: int, width: int) -> str:
    """Binary string i_1...i_n (vertex 1 first)."""
    return "".join("1" if (mask >> j) & 1 else "0" for j in range(width))


def string_to_mask(bits: str) -> int:
    m = 0
    for j, ch in enumerate(bits):
        if ch == "1":
            m |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r}")
    return m


def dot(a: int, b: int) -> int:
    """GF(2) inner product of two bitmask vectors."""
    return (a & b).bit_count() & 1


def restrict(mask: int, positions: list[int]) -> int:
    """Gather the bits of mask at the given 0-indexed positions.

    Bit k of the result is bit positions[k] of the input, so the relative
    order of the positions is preserved.
    """
    out = 0
    for k, p in enumerate(positions):
        if (mask >> p) & 1:
            out |= 1 << k
    return out


def scatter(mask: int, positions: list[int]) -> int:
    """Inverse of restrict: place bit k of mask at position positions[k]."""
    out = 0
    for k, p in enumerate(positions):
        if (mask >> k) & 1:
            out |= 1 << p
    return out


@dataclass(frozen=True)
class Basis:
    """Canonical reduced row-echelon basis of a GF(2) subspace.

    Rows are sorted by pivot; each pivot bit (the lowest set bit of its
    row) occurs in no other row.  Two Basis values spanning the same
    subspace compare equal.
    """

    width: int
    rows: tuple[int, ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)


def rref(rows: Iterable[int], width: int) -> Basis:
    """Reduced row echelon form over GF(2), lowest-index pivots first."""
    if width < 0 or width > MAX_WIDTH:
        raise ValueError(f"width {width} out of range 0..{MAX_WIDTH}")
    work = list(rows)
    pivots = []
    r = 0
    for col in range(width):
        piv = None
        for i in range(r, len(work)):
            if (work[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return Basis(width, tuple(work[:r]), tuple(pivots))


def rank(rows: Iterable[int], width: int) -> int:
    return rref(rows, width).dim


def kernel(rows: Iterable[int], width: int) -> Basis:
    """Canonical basis of {x : row . x = 0 over GF(2) for every row}."""
    echelon = rref(rows, width)
    pivot_set = set(echelon.pivots)
    free = [c for c in range(width) if c not in pivot_set]
    vecs = []
    for f in free:
        v = 1 << f
        for p, row in zip(echelon.pivots, echelon.rows):
            if (row >> f) & 1:
                v |= 1 << p
        vecs.append(v)
    return rref(vecs, width)


def contains(basis: Basis, vec: int) -> bool:
    """Membership of vec in span(basis) by elimination against its rows."""
    for p, row in zip(basis.pivots, basis.rows):
        if (vec >> p) & 1:
            vec ^= row
    return vec == 0


def complement_basis(sub: Basis, sup: Basis) -> Basis:
    """Direct-sum complement of span(sub) inside span(sup).

    Rows are drawn verbatim from sup's rows, scanned in pivot order, so
    the result is deterministic and itself a valid canonical basis.
    """
    if sub.width != sup.width:
        raise ValueError("width mismatch")
    for row in sub.rows:
        if not contains(sup, row):
            raise ValueError("sub is not contained in sup")
    elim = {p: row for p, row in zip(sub.pivots, sub.rows)}
    taken = []
    for row in sup.rows:
        v = row
        changed = True
        while changed:
            changed = False
            for p, b in elim.items():
                if (v >> p) & 1:
                    v ^= b
                    changed = True
        if v:
            low = (v & -v).bit_length() - 1
            elim[low] = v
            taken.append(row)
    return Basis(sup.width, tuple(taken), tuple((r & -r).bit_length() - 1 for r in taken))


def intersect(a: Basis, b: Basis) -> Basis:
    """Basis of span(a) & span(b) via the Zassenhaus double-width trick."""
    if a.width != b.width:
        raise ValueError("width mismatch")
    w = a.width
    stacked = [row | (row << w) for row in a.rows]
    stacked += [row for row in b.rows]
    echelon = rref(stacked, 2 * w)
    low_mask = (1 << w) - 1
    inter = [row >> w for row in echelon.rows if (row & low_mask) == 0]
    return rref(inter, w)


def iter_span(rows: Iterable[int]) -> Iterator[int]:
    """All 2^k XOR combinations of the given independent rows, Gray order."""
    rows = list(rows)
    cur = 0
    yield cur
    for t in range(1, 1 << len(rows)):
        cur ^= rows[(t & -t).bit_length() - 1]
        yield cur
