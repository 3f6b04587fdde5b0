"""Linear algebra over GF(2) on m-bit vectors stored as ints.

Subspaces are kept in reduced row echelon form (pivot = highest set bit,
each pivot bit cleared from every other basis vector, vectors sorted by
descending pivot), so two equal subspaces always have identical bases.
Affine subspaces reduce their offset modulo the basis for the same reason.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


def _insert(pivots: dict[int, int], v: int) -> bool:
    """Reduce v against the echelon basis and add it if independent."""
    while v:
        top = v.bit_length() - 1
        if top not in pivots:
            pivots[top] = v
            return True
        v ^= pivots[top]
    return False


def _rref(pivots: dict[int, int]) -> tuple[int, ...]:
    order = sorted(pivots, reverse=True)
    rows = {p: pivots[p] for p in order}
    # back-substitute so each pivot bit appears in exactly one row
    for p in sorted(order):
        for q in order:
            if q != p and rows[q] >> p & 1:
                rows[q] ^= rows[p]
    return tuple(rows[p] for p in order)


def reduce(v: int, vectors: Iterable[int]) -> int:
    """Reduce v modulo an RREF basis (clears every pivot bit)."""
    for b in vectors:
        if v >> (b.bit_length() - 1) & 1:
            v ^= b
    return v


@dataclass(frozen=True)
class SubspaceBasis:
    m: int
    vectors: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(v.bit_length() - 1 for v in self.vectors)

    def __contains__(self, v: int) -> bool:
        return reduce(v, self.vectors) == 0

    def __len__(self):
        return 1 << self.dim

    def __iter__(self):
        """All 2^dim elements of the subspace."""
        elems = [0]
        for b in self.vectors:
            elems += [e ^ b for e in elems]
        return iter(elems)

    def issubspace(self, other: SubspaceBasis) -> bool:
        return all(v in other for v in self.vectors)

    def hex(self) -> list[str]:
        return [f"{v:#x}" for v in self.vectors]


@dataclass(frozen=True)
class AffineSubspace:
    offset: int
    basis: SubspaceBasis

    @classmethod
    def make(cls, offset: int, basis: SubspaceBasis) -> AffineSubspace:
        return cls(reduce(offset, basis.vectors), basis)

    @property
    def dim(self) -> int:
        return self.basis.dim

    def __contains__(self, v: int) -> bool:
        return (v ^ self.offset) in self.basis

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return (self.offset ^ v for v in self.basis)


def span(vectors: Iterable[int], m: int) -> SubspaceBasis:
    pivots: dict[int, int] = {}
    for v in vectors:
        if v >> m:
            raise ValueError(f"vector {v:#x} does not fit in {m} bits")
        _insert(pivots, v)
    return SubspaceBasis(m, _rref(pivots))


def rank(vectors: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    return sum(_insert(pivots, v) for v in vectors)


def affine_hull(points: Iterable[int], m: int) -> AffineSubspace:
    """Smallest affine subspace containing every point."""
    pts = iter(points)
    try:
        p0 = next(pts)
    except StopIteration:
        raise ValueError("affine hull of an empty set") from None
    basis = span((p ^ p0 for p in pts), m)
    return AffineSubspace.make(p0, basis)


def is_coset(points: Iterable[int]) -> bool:
    """True iff the set is a coset w + W of a linear subspace.

    Equivalent to the set filling its own affine hull. Sizes that are not a
    power of two are rejected without elimination, and elimination stops as
    soon as the hull outgrows the set.
    """
    pts = set(points)
    if not pts:
        raise ValueError("coset test on an empty set")
    n = len(pts)
    if n & (n - 1):
        return False
    k = n.bit_length() - 1
    it = iter(pts)
    p0 = next(it)
    pivots: dict[int, int] = {}
    for p in it:
        if _insert(pivots, p ^ p0) and len(pivots) > k:
            return False
    return len(pivots) == k


def ortho_complement(b: SubspaceBasis) -> SubspaceBasis:
    """{w : <w, v> = 0 for all v in b} under the standard dot product."""
    piv = set(b.pivots)
    out = []
    for j in range(b.m):
        if j in piv:
            continue
        w = 1 << j
        for v in b.vectors:
            if v >> j & 1:
                w |= 1 << (v.bit_length() - 1)
        out.append(w)
    return span(out, b.m)


def dot(u: int, v: int) -> int:
    return (u & v).bit_count() & 1
