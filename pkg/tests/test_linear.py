import random
from functools import lru_cache
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from vbfkit import corpus
from vbfkit.differential import derivative_image, is_weakly_apn
from vbfkit.linalg import affine_hull, dot, span
from vbfkit.sampling import random_function, random_permutation
from vbfkit.vbf import VBF, BoolFn, component, degree
from vbfkit.linear import (
    affine_cover,
    affine_cover_check,
    autocorrelation,
    components_partially_bent,
    is_balanced,
    is_bent,
    is_partially_bent,
    linear_structures,
    n_hat,
    n_histogram,
    v_space,
    walsh,
)
from strategies import functions, permutations


def boolfns(min_m=1, max_m=6):
    return st.integers(min_m, max_m).flatmap(
        lambda m: st.lists(st.integers(0, 1), min_size=1 << m, max_size=1 << m).map(
            lambda b, m=m: BoolFn(m, tuple(b))
        )
    )


def naive_walsh(b):
    n = 1 << b.m
    return [sum((-1) ** (b.bits[x] ^ dot(u, x)) for x in range(n)) for u in range(n)]


@given(boolfns())
def test_walsh_matches_direct_sum_and_parseval(b):
    w = walsh(b).values
    assert list(w) == naive_walsh(b)
    assert sum(v * v for v in w) == 1 << (2 * b.m)
    assert w[0] == (1 << b.m) - 2 * b.weight
    assert is_balanced(b) == (w[0] == 0)


def test_walsh_trivial_cases():
    assert walsh(BoolFn(3, (0,) * 8)).values == (8,) + (0,) * 7
    lin = BoolFn(3, tuple(dot(5, x) for x in range(8)))
    assert walsh(lin)[5] == 8 and sum(abs(v) for v in walsh(lin).values) == 8


def test_bent_examples():
    x1x2 = BoolFn(2, (0, 0, 0, 1))
    assert is_bent(x1x2) and not is_balanced(x1x2)
    q = BoolFn(4, tuple((x & 1) * (x >> 1 & 1) ^ (x >> 2 & 1) * (x >> 3 & 1) for x in range(16)))
    assert is_bent(q)
    assert linear_structures(q).dim == 0


@given(boolfns(min_m=1, max_m=7).filter(lambda b: b.m % 2 == 1))
def test_no_bent_in_odd_dimension(b):
    assert not is_bent(b)


@given(permutations(max_m=5))
def test_permutation_components_balanced_not_bent(f):
    for v in range(1, f.size):
        c = component(f, v)
        assert is_balanced(c) and not is_bent(c)


@given(boolfns(max_m=5))
def test_autocorrelation_and_linear_structures(b):
    n = 1 << b.m
    r = autocorrelation(b)
    for a in range(n):
        assert r[a] == sum((-1) ** (b.bits[x ^ a] ^ b.bits[x]) for x in range(n))
    ls = linear_structures(b)
    want = {a for a in range(n) if len({b.bits[x ^ a] ^ b.bits[x] for x in range(n)}) == 1}
    assert set(ls) == want


def test_linear_function_has_full_structure_space():
    b = BoolFn(4, tuple(dot(0b1011, x) for x in range(16)))
    assert linear_structures(b).dim == 4


# --- definitional partially-bent oracle (m <= 4) ---------------------------

@lru_cache(maxsize=None)
def all_subspaces(m):
    subs = set()
    for k in range(m + 1):
        for vs in combinations(range(1, 1 << m), k):
            subs.add(span(vs, m))
    return [s for s in subs]


def _restriction(b, basis):
    out = []
    for c in range(1 << len(basis)):
        x = 0
        for i, v in enumerate(basis):
            if c >> i & 1:
                x ^= v
        out.append(b.bits[x])
    return out


def _affine(vals):
    k = len(vals).bit_length() - 1
    return all(vals[c1 ^ c2] ^ vals[c1] ^ vals[c2] ^ vals[0] == 0
               for c1 in range(1 << k) for c2 in range(1 << k))


def _bent(vals):
    k = len(vals).bit_length() - 1
    if k % 2:
        return False
    target = 1 << (k // 2)
    return all(abs(sum((-1) ** (vals[x] ^ dot(u, x)) for x in range(1 << k))) == target
               for u in range(1 << k))


def definitional_partially_bent(b):
    m = b.m
    subs = all_subspaces(m)
    for V in subs:
        if not _affine(_restriction(b, V.vectors)):
            continue
        for U in subs:
            if U.dim + V.dim != m or span(list(U.vectors) + list(V.vectors), m).dim != m:
                continue
            if not _bent(_restriction(b, U.vectors)):
                continue
            f0 = b.bits[0]
            if all(b.bits[y ^ z] == b.bits[y] ^ b.bits[z] ^ f0 for y in U for z in V):
                return True
    return False


def test_partially_bent_matches_definition_exhaustive_small():
    for m in (1, 2, 3):
        for bits in product((0, 1), repeat=1 << m):
            b = BoolFn(m, bits)
            assert is_partially_bent(b) == definitional_partially_bent(b), bits


def test_partially_bent_matches_definition_m4_sample():
    rng = random.Random(3)
    seen = set()
    for _ in range(150):
        b = BoolFn(4, tuple(rng.getrandbits(1) for _ in range(16)))
        got = is_partially_bent(b)
        assert got == definitional_partially_bent(b)
        seen.add(got)
    assert seen == {True, False}


def test_degree3_non_partially_bent_witness():
    # x1x2x3: derivative in direction e1 is x2x3, neither constant nor balanced
    b = BoolFn(4, tuple((x & 7) == 7 for x in range(16)))
    assert degree(b) == 3
    assert not is_partially_bent(b)
    assert not definitional_partially_bent(b)


def test_quadratics_m4_exhaustive():
    monos = [0] + [1 << i for i in range(4)] + [(1 << i) | (1 << j) for i, j in combinations(range(4), 2)]
    dims = set()
    for mask in range(1 << len(monos)):
        bits = tuple(
            sum((x & u) == u for k, u in enumerate(monos) if mask >> k & 1) % 2 for x in range(16)
        )
        b = BoolFn(4, bits)
        assert is_partially_bent(b)
        d = linear_structures(b).dim
        dims.add(d)
        assert d in (0, 2, 4)
        if degree(b) == 2 and not is_bent(b):
            assert d == 2
    assert dims == {0, 2, 4}


@given(functions(max_m=5))
def test_bulk_partially_bent_matches_single(f):
    flags = components_partially_bent(f)
    assert flags.tolist() == [is_partially_bent(component(f, v)) for v in range(f.size)]


# --- V_a, n_hat, n_i --------------------------------------------------------

def brute_v_space(f, a):
    d = [f(x ^ a) ^ f(x) for x in range(f.size)]
    return {v for v in range(f.size) if len({dot(v, y) for y in d}) == 1}


@given(functions(max_m=5))
def test_v_space_and_n_hat_cross_check(f):
    dims = []
    for a in range(1, f.size):
        vs = v_space(f, a)
        assert set(vs) == brute_v_space(f, a)
        dims.append(vs.dim)
    t = max(dims)
    assert n_hat(f) == (1 << t) - 1 == max(len(brute_v_space(f, a)) - 1 for a in range(1, f.size))


def test_v_space_rejects_zero_direction():
    with pytest.raises(ValueError):
        v_space(VBF.identity(3), 0)
    with pytest.raises(ValueError):
        affine_cover(VBF.identity(3), 0)


def test_identity_profile():
    f = VBF.identity(4)
    assert all(v_space(f, a).dim == 4 for a in range(1, 16))
    p = n_histogram(f)
    assert p.n_hat == 15 and p.n(1) == 15 and p.t == 4


@given(functions(max_m=5))
def test_histogram_sums_and_counts(f):
    p = n_histogram(f)
    assert sum(p.n_hist.values()) == f.size - 1
    assert p.n_hat == (1 << p.t) - 1
    degs = [degree(component(f, v)) for v in range(1, f.size)]
    assert p.quad_count == sum(1 <= d <= 2 for d in degs)
    assert p.quad2_count == sum(d == 2 for d in degs)
    # components of degree <= 2 plus 0 form a subspace
    low = [v for v in range(1, f.size) if degs[v - 1] <= 2]
    assert len(span(low, f.m)) == len(low) + 1


@given(permutations(max_m=5))
def test_n_hat_zero_permutations_have_no_partially_bent_component(f):
    if n_hat(f) == 0:
        assert n_histogram(f).pb_count == 0


@given(functions(max_m=5))
def test_affine_cover_matches_hull(f):
    for a in range(1, f.size):
        assert affine_cover_check(f, a)
        assert set(affine_cover(f, a)) >= derivative_image(f, a)


def brute_min_affine_superset(points, m):
    best = None
    for V in all_subspaces(m):
        for off in range(1 << m):
            s = {off ^ v for v in V}
            if points <= s and (best is None or len(s) < len(best)):
                best = s
    return best


def test_affine_hull_of_derivative_images_brute_force_m4():
    rng = random.Random(11)
    for _ in range(20):
        f = random_function(4, rng)
        for a in (1, 6, 15):
            img = set(derivative_image(f, a))
            assert set(affine_hull(img, 4)) == brute_min_affine_superset(img, 4)


def test_weakly_apn_permutations_have_small_n_hat():
    rng = random.Random(2)
    for _ in range(200):
        f = random_permutation(4, rng)
        if is_weakly_apn(f):
            assert n_hat(f) <= 1


@pytest.mark.parametrize("name, n_hat_, n3", [
    ("sec7_example1", 0, 15), ("sec7_example2", 1, 15), ("sec7_example3", 1, 14),
])
def test_anf_sbox_profiles(name, n_hat_, n3):
    f = corpus.load(name)
    p = n_histogram(f)
    assert (p.n_hat, p.n(3)) == (n_hat_, n3)
    assert p.t == (0 if n_hat_ == 0 else 1)
    assert all(affine_cover_check(f, a) for a in range(1, 16))
