from itertools import product

import pytest
from hypothesis import given, strategies as st

from vbfkit.linalg import (
    AffineSubspace,
    affine_hull,
    dot,
    is_coset,
    ortho_complement,
    rank,
    span,
)


def closure(vectors):
    """Oracle: all XOR combinations, by repeated closure."""
    s = {0}
    for v in vectors:
        s |= {x ^ v for x in s}
    return s


vecs = st.lists(st.integers(0, 63), max_size=8)


@given(vecs)
def test_rank_matches_closure_size(vs):
    assert 1 << rank(vs) == len(closure(vs))


@given(vecs)
def test_span_is_canonical(vs):
    b = span(vs, 6)
    assert set(b) == closure(vs)
    assert span(list(closure(vs)), 6) == b
    assert span(list(reversed(vs)), 6) == b


@given(vecs)
def test_complement_dimension_and_orthogonality(vs):
    b = span(vs, 6)
    c = ortho_complement(b)
    assert b.dim + c.dim == 6
    for u in b.vectors:
        for w in c.vectors:
            assert dot(u, w) == 0
    assert ortho_complement(c) == b


@given(vecs, st.integers(0, 63))
def test_cosets_recognised(vs, off):
    pts = {off ^ x for x in closure(vs)}
    assert is_coset(pts)
    hull = affine_hull(pts, 6)
    assert set(hull) == pts
    assert hull == AffineSubspace.make(off, span(vs, 6))


def test_non_cosets():
    assert not is_coset([0, 1, 2])
    assert not is_coset([1, 2, 4, 8])
    assert is_coset([5])
    with pytest.raises(ValueError):
        is_coset([])


def test_affine_hull_exhaustive_m3():
    # oracle: smallest coset (by brute force over all cosets) containing the set
    cosets = {frozenset(o ^ x for x in closure(b))
              for b in product(range(8), repeat=3) for o in range(8)}
    for mask in range(1, 256):
        pts = [x for x in range(8) if mask >> x & 1]
        best = min((c for c in cosets if set(pts) <= c), key=len)
        assert set(affine_hull(pts, 3)) == best
