import random

from hypothesis import given, strategies as st

from vbfkit.sampling import (
    random_affine,
    random_ea_triple,
    random_function,
    random_permutation,
    random_quadratic,
    sample_filtered,
)
from vbfkit.vbf import algebraic_degree, is_permutation


@given(st.integers(1, 8), st.integers(0, 2**32))
def test_draws_are_reproducible(m, seed):
    a, b = random.Random(seed), random.Random(seed)
    assert random_permutation(m, a) == random_permutation(m, b)
    assert random_function(m, a) == random_function(m, b)
    assert random_affine(m, a) == random_affine(m, b)
    assert random_ea_triple(m, a) == random_ea_triple(m, b)
    assert random_quadratic(m, a) == random_quadratic(m, b)


@given(st.integers(1, 6), st.integers(0, 2**32))
def test_draw_properties(m, seed):
    rng = random.Random(seed)
    assert is_permutation(random_permutation(m, rng))
    assert random_affine(m, rng).invertible
    assert algebraic_degree(random_quadratic(m, rng)) <= 2


def test_filtered_sampling_budget_and_rate():
    rng = random.Random(0)
    out = sample_filtered(lambda r: random_permutation(3, r), lambda f: False, 1, rng, budget=50)
    assert out.accepted == [] and out.drawn == 50 and out.acceptance_rate == 0.0
    out = sample_filtered(lambda r: random_permutation(3, r), lambda f: True, 5, rng, budget=50)
    assert len(out.accepted) == 5 and out.drawn == 5 and out.acceptance_rate == 1.0
    out = sample_filtered(lambda r: random_permutation(3, r), lambda f: True, 0, rng, budget=50)
    assert out.drawn == 0
