"""Seeded random generators shared by the theorem checks and ``search``.

All draws go through a ``random.Random`` instance: permutations by its
Fisher-Yates ``shuffle``, invertible matrices by rejection on GF(2) rank,
so a (seed, count) pair always reproduces the same objects.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .vbf import VBF, AffineMap, EATriple


def random_permutation(m: int, rng: random.Random) -> VBF:
    table = list(range(1 << m))
    rng.shuffle(table)
    return VBF(m, tuple(table))


def random_function(m: int, rng: random.Random) -> VBF:
    return VBF(m, tuple(rng.getrandbits(m) for _ in range(1 << m)))


def random_matrix(m: int, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.getrandbits(m) for _ in range(m))


def random_affine(m: int, rng: random.Random, invertible: bool = True) -> AffineMap:
    while True:
        a = AffineMap(m, random_matrix(m, rng), rng.getrandbits(m))
        if not invertible or a.invertible:
            return a


def random_ea_triple(m: int, rng: random.Random) -> EATriple:
    return EATriple(
        outer=random_affine(m, rng),
        inner=random_affine(m, rng),
        additive=random_affine(m, rng, invertible=False),
    )


@lru_cache(maxsize=None)
def _low_degree_monomials(m: int, max_deg: int) -> np.ndarray:
    """Truth tables (rows) of every monomial of degree <= max_deg."""
    monos = [0]
    for k in range(1, max_deg + 1):
        monos += [sum(1 << j for j in c) for c in combinations(range(m), k)]
    x = np.arange(1 << m)
    return np.array([(x & u) == u for u in monos], dtype=np.int64)


def random_quadratic(m: int, rng: random.Random) -> VBF:
    """Every coordinate gets an independent uniformly random ANF of degree <= 2."""
    monos = _low_degree_monomials(m, 2)
    k = len(monos)
    coeffs = np.array([[rng.getrandbits(1) for _ in range(k)] for _ in range(m)], dtype=np.int64)
    coords = (coeffs @ monos) & 1
    table = (coords << np.arange(m)[:, None]).sum(axis=0)
    return VBF(m, tuple(table.tolist()))


@dataclass
class FilteredSample:
    """Accepted objects plus the rejection statistics behind them."""

    accepted: list = field(default_factory=list)
    drawn: int = 0

    @property
    def acceptance_rate(self) -> float:
        return len(self.accepted) / self.drawn if self.drawn else 0.0


def sample_filtered(
    draw: Callable[[random.Random], VBF],
    predicate: Callable[[VBF], bool],
    count: int,
    rng: random.Random,
    budget: int,
) -> FilteredSample:
    """Rejection sampling; stops after ``count`` hits or ``budget`` draws."""
    out = FilteredSample()
    while len(out.accepted) < count and out.drawn < budget:
        f = draw(rng)
        out.drawn += 1
        if predicate(f):
            out.accepted.append(f)
    return out
