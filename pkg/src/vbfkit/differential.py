"""Derivatives, difference tables and (weak) differential uniformity.

Every aggregate runs over a != 0 only; row 0 of the DDT is kept for
completeness. The weak-uniformity inequality |Im(f_a)| * delta > 2^(m-1)
is evaluated in integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import TheoremViolation
from .field import FieldSpec, power_table
from .linalg import is_coset
from .vbf import VBF


@dataclass(frozen=True, eq=False)
class DDT:
    m: int
    counts: np.ndarray

    def __getitem__(self, ab):
        a, b = ab
        return int(self.counts[a, b])

    def row(self, a: int) -> np.ndarray:
        return self.counts[a]


@dataclass(frozen=True)
class Spectrum:
    """omega[i] = number of b hit exactly i times by x -> f(x+1) + f(x)."""

    m: int
    omega: dict[int, int]

    @property
    def image_size(self) -> int:
        return (1 << self.m) - self.omega.get(0, 0)

    def to_json(self) -> dict:
        return {str(i): n for i, n in sorted(self.omega.items())}


@dataclass(frozen=True)
class DiffReport:
    delta: int
    min_image: int
    weak_delta: int
    weak_delta_pow2: int
    per_a_image_sizes: tuple[int, ...]
    per_a_is_coset: tuple[bool, ...]
    m: int

    @property
    def weakly_apn(self) -> bool:
        return 4 * self.min_image > 1 << self.m

    @property
    def apn(self) -> bool:
        return self.delta == 2

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "min_image": self.min_image,
            "weak_delta": self.weak_delta,
            "weak_delta_pow2": self.weak_delta_pow2,
            "weakly_apn": self.weakly_apn,
            "per_a": [
                {"a": a, "image_size": n, "is_coset": c}
                for a, (n, c) in enumerate(zip(self.per_a_image_sizes, self.per_a_is_coset), start=1)
            ],
        }


def derivative(f: VBF, a: int) -> VBF:
    return VBF(f.m, tuple(f.derivatives[a].tolist()))


def ddt(f: VBF) -> DDT:
    n = f.size
    idx = (np.arange(n)[:, None] * n + f.derivatives).ravel()
    counts = np.bincount(idx, minlength=n * n).reshape(n, n)
    counts.flags.writeable = False
    return DDT(f.m, counts)


def differential_uniformity(f: VBF) -> int:
    return int(ddt(f).counts[1:].max())


def is_apn(f: VBF) -> bool:
    return differential_uniformity(f) == 2


def derivative_image(f: VBF, a: int) -> frozenset[int]:
    return frozenset(np.unique(f.derivatives[a]).tolist())


def image_sizes(f: VBF) -> np.ndarray:
    """|Im(f_a)| for a = 1 .. 2^m - 1."""
    return np.count_nonzero(ddt(f).counts[1:], axis=1)


def min_image(f: VBF) -> int:
    return int(image_sizes(f).min())


def weak_delta_for(min_image: int, m: int) -> int:
    """Smallest positive integer delta with min_image * delta > 2^(m-1)."""
    return (1 << (m - 1)) // min_image + 1


def weak_delta_pow2_for(min_image: int, m: int) -> int:
    d = 1
    while min_image * d <= 1 << (m - 1):
        d *= 2
    return d


def is_weakly_apn(f: VBF) -> bool:
    return 4 * min_image(f) > f.size


def is_weakly_delta(f: VBF, delta: int) -> bool:
    if delta <= 0:
        raise ValueError("delta must be a positive integer")
    return min_image(f) * delta > 1 << (f.m - 1)


def weak_uniformity(f: VBF) -> DiffReport:
    table = ddt(f)
    rows = table.counts[1:]
    sizes = np.count_nonzero(rows, axis=1)
    cosets = tuple(is_coset(np.flatnonzero(r).tolist()) for r in rows)
    lo = int(sizes.min())
    return DiffReport(
        delta=int(rows.max()),
        min_image=lo,
        weak_delta=weak_delta_for(lo, f.m),
        weak_delta_pow2=weak_delta_pow2_for(lo, f.m),
        per_a_image_sizes=tuple(int(s) for s in sizes),
        per_a_is_coset=cosets,
        m=f.m,
    )


def differential_spectrum(d: int, spec: FieldSpec, check_all_rows: bool = False) -> Spectrum:
    """Spectrum of x^d, read off the a = 1 row only.

    With ``check_all_rows`` every other row is recomputed and must show the
    same multiplicity histogram; a mismatch raises TheoremViolation.
    """
    t = np.array(power_table(d, spec), dtype=np.int64)
    x = np.arange(spec.size)
    row = np.bincount(t[x ^ 1] ^ t, minlength=spec.size)
    omega = dict(sorted(Counter(row.tolist()).items()))
    if check_all_rows:
        for a in range(2, spec.size):
            other = Counter(np.bincount(t[x ^ a] ^ t, minlength=spec.size).tolist())
            if other != omega:
                raise TheoremViolation(
                    f"x^{d}: row a={a} has a different multiplicity histogram", [(d, a)]
                )
    return Spectrum(spec.m, omega)


@dataclass(frozen=True)
class PowerImageProfile:
    d: int
    m: int
    image_size: int
    is_coset: bool


def power_image_uniformity(d: int, spec: FieldSpec) -> PowerImageProfile:
    """Image size and coset flag of x^d's derivatives, asserted constant in a."""
    f = VBF(spec.m, tuple(power_table(d, spec)))
    counts = ddt(f).counts[1:]
    sizes = np.count_nonzero(counts, axis=1)
    flags = [is_coset(np.flatnonzero(r).tolist()) for r in counts]
    if sizes.min() != sizes.max():
        a = int(np.argmax(sizes != sizes[0])) + 1
        raise TheoremViolation(f"x^{d}: derivative image sizes differ across a", [(d, 1, a)])
    if len(set(flags)) > 1:
        a = flags.index(not flags[0]) + 1
        raise TheoremViolation(f"x^{d}: coset property differs across a", [(d, 1, a)])
    return PowerImageProfile(d, spec.m, int(sizes[0]), flags[0])
