"""Bit-packed linear algebra over GF(2).

Vectors are plain Python ints used as bitsets: bit ``c`` is coordinate ``c``
of a universe of size ``width``.  Addition is XOR.  An :class:`EchelonBasis`
holds a streaming row-echelon basis of a subspace; pivots are chosen at the
highest occupied bit position, so the caller controls pivot priority by
laying out coordinates (an optional ``pivot_order`` permutation re-maps
coordinates to bit positions).
"""

from __future__ import annotations

from typing import Iterable, Iterator


def from_support(coords: Iterable[int]) -> int:
    """Bit vector with ones exactly at the given coordinates."""
    v = 0
    for c in coords:
        v |= 1 << c
    return v


def support(v: int) -> Iterator[int]:
    """Yield set coordinates of v, lowest first."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


class EchelonBasis:
    """Streaming row-echelon basis of a GF(2) subspace.

    Rows are kept in forward echelon form only (each row's pivot is its
    highest set bit and pivots are distinct); reduced row-echelon form is
    produced on demand by :meth:`rref`.  ``pivot_order``, when given, is a
    permutation of ``range(width)`` mapping bit position -> coordinate; the
    coordinate stored at the highest position is eliminated first.
    """

    def __init__(self, width: int, pivot_order: list[int] | None = None):
        self.width = width
        self._rows: dict[int, int] = {}  # pivot bit position -> row (internal layout)
        if pivot_order is None:
            self._pos = None  # identity layout
        else:
            assert len(pivot_order) == width
            self._pos = [0] * width  # coordinate -> bit position
            for position, coord in enumerate(pivot_order):
                self._pos[coord] = position
            self._order = list(pivot_order)

    # -- layout ---------------------------------------------------------

    def _to_internal(self, v: int) -> int:
        if self._pos is None:
            return v
        pos = self._pos
        out = 0
        while v:
            low = v & -v
            out |= 1 << pos[low.bit_length() - 1]
            v ^= low
        return out

    def _from_internal(self, v: int) -> int:
        if self._pos is None:
            return v
        order = self._order
        out = 0
        while v:
            low = v & -v
            out |= 1 << order[low.bit_length() - 1]
            v ^= low
        return out

    # -- core operations --------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list[int]:
        """Pivot coordinates (external layout), ascending."""
        if self._pos is None:
            return sorted(self._rows)
        return sorted(self._order[p] for p in self._rows)

    def insert(self, v: int) -> tuple[bool, int]:
        """Insert a vector; returns (inserted, remainder).

        ``inserted`` is True when v was independent of the current rows (the
        rank grew); ``remainder`` is the reduced row actually stored, or 0
        when v was dependent.
        """
        if v >> self.width:
            raise ValueError("vector exceeds universe width")
        rows = self._rows
        r = self._to_internal(v)
        while r:
            p = r.bit_length() - 1
            row = rows.get(p)
            if row is None:
                rows[p] = r
                return True, self._from_internal(r)
            r ^= row
        return False, 0

    def reduce(self, v: int) -> int:
        """Canonical representative of v modulo the row space.

        Clears every pivot coordinate from v (scanning high positions first);
        the result is supported on non-pivot coordinates only, and is the
        unique such representative of the coset v + rowspace.
        """
        if v >> self.width:
            raise ValueError("vector exceeds universe width")
        rows = self._rows
        r = self._to_internal(v)
        done = 0
        while r:
            p = r.bit_length() - 1
            row = rows.get(p)
            if row is None:
                bit = 1 << p
                done |= bit
                r ^= bit
            else:
                r ^= row
        return self._from_internal(done)

    def member(self, v: int) -> bool:
        """True iff v lies in the row space."""
        return self.reduce(v) == 0

    def rows(self) -> list[int]:
        """Current rows in external layout (forward echelon form)."""
        return [self._from_internal(r) for r in self._rows.values()]

    def rows_by_pivot(self) -> dict[int, int]:
        """Forward-echelon rows keyed by pivot coordinate (external layout)."""
        if self._pos is None:
            return dict(self._rows)
        return {
            self._order[p]: self._from_internal(r) for p, r in self._rows.items()
        }

    def rref(self) -> dict[int, int]:
        """Reduced rows keyed by pivot coordinate (external layout).

        Each returned row is zero at every other pivot.  Processing pivots in
        ascending position keeps already-cleaned rows clean, so one pass
        suffices (a forward-echelon row never contains bits above its own
        pivot).
        """
        rows = self._rows
        clean: dict[int, int] = {}
        for p in sorted(rows):  # ascending: lower pivots are already clean
            body = rows[p] ^ (1 << p)
            fixed = 0
            while body:
                b = body.bit_length() - 1
                row = clean.get(b)
                if row is None:
                    fixed |= 1 << b
                    body ^= 1 << b
                else:
                    body ^= row  # clears b, adds only free bits below b
            clean[p] = (1 << p) | fixed
        if self._pos is None:
            return clean
        return {self._order[p]: self._from_internal(r) for p, r in clean.items()}


def rank(rows: Iterable[int], width: int) -> int:
    """Rank of a collection of bit-vector rows."""
    eb = EchelonBasis(width)
    for r in rows:
        eb.insert(r)
    return eb.rank


def kernel_basis(rows: Iterable[int], width: int) -> list[int]:
    """Basis of {x : every row r has parity(r & x) = 0}.

    Rows are linear functionals on the width-coordinate space; the kernel has
    dimension width - rank(rows).
    """
    eb = EchelonBasis(width)
    for r in rows:
        eb.insert(r)
    reduced = eb.rref()
    pivot_set = set(reduced)
    out = []
    for f in range(width):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, row in reduced.items():
            if (row >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def solve_combination(targets: Iterable[int], rhs: int) -> int | None:
    """Mask c with XOR of targets[k] over set bits k of c equal to rhs, or None.

    Elimination tracks which inputs built each row, so the returned mask
    selects an actual sub-collection; dependent targets never appear in it.
    """
    rows: dict[int, tuple[int, int]] = {}
    for k, v in enumerate(targets):
        c = 1 << k
        while v:
            p = v.bit_length() - 1
            if p in rows:
                rv, rc = rows[p]
                v ^= rv
                c ^= rc
            else:
                rows[p] = (v, c)
                break
    v, c = rhs, 0
    while v:
        p = v.bit_length() - 1
        if p not in rows:
            return None
        rv, rc = rows[p]
        v ^= rv
        c ^= rc
    return c


def intersect_coordinate_subspace(
    gens: Iterable[int], width: int, allowed: int
) -> EchelonBasis:
    """Echelon basis of span(gens) ∩ span{e_c : bit c set in allowed}.

    Elimination gives pivot priority to the DISALLOWED coordinates (they are
    laid out at the high bit positions), so any echelon row whose pivot is an
    allowed coordinate carries no disallowed coordinate at all; those rows
    span exactly the intersection.
    """
    allowed_coords = [c for c in range(width) if (allowed >> c) & 1]
    blocked_coords = [c for c in range(width) if not (allowed >> c) & 1]
    order = allowed_coords + blocked_coords  # disallowed at high positions
    eb = EchelonBasis(width, pivot_order=order)
    for g in gens:
        eb.insert(g)
    cut = len(allowed_coords)
    result = EchelonBasis(width)
    for p, row in eb._rows.items():
        if p < cut:
            assert row >> cut == 0
            result.insert(eb._from_internal(row))
    return result


__all__ = [
    "EchelonBasis",
    "from_support",
    "support",
    "rank",
    "kernel_basis",
    "solve_combination",
    "intersect_coordinate_subspace",
]
