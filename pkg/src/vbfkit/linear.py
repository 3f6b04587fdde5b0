"""Component-level metrics: Walsh spectra, linear structures, partially bent
components, the constant-component spaces V_a of the derivatives, n_hat and
the degree histogram n_i.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .differential import ddt
from .errors import TheoremViolation
from .linalg import AffineSubspace, SubspaceBasis, affine_hull, ortho_complement, span
from .vbf import VBF, BoolFn, component_degrees, component_matrix, fwht, parity_table


@dataclass(frozen=True)
class WalshSpectrum:
    m: int
    values: tuple[int, ...]

    def __getitem__(self, u: int) -> int:
        return self.values[u]


def walsh(b: BoolFn) -> WalshSpectrum:
    """W(u) = sum_x (-1)^(S(x) + <u, x>), fast butterfly."""
    signs = 1 - 2 * b.array.astype(np.int64)
    return WalshSpectrum(b.m, tuple(fwht(signs).tolist()))


def is_balanced(b: BoolFn) -> bool:
    return 2 * b.weight == 1 << b.m


def is_bent(b: BoolFn) -> bool:
    if b.m % 2:
        return False
    target = 1 << (b.m // 2)
    return all(abs(w) == target for w in walsh(b).values)


def autocorrelation(b: BoolFn) -> np.ndarray:
    """r(a) = sum_x (-1)^(S(x + a) + S(x)), computed directly."""
    x = np.arange(1 << b.m)
    s = b.array
    d = s[x[None, :] ^ x[:, None]] ^ s[None, :]
    return (1 << b.m) - 2 * d.sum(axis=1, dtype=np.int64)


def _closed_span(elems: list[int], m: int, what: str) -> SubspaceBasis:
    basis = span(elems, m)
    if len(basis) != len(elems):
        raise TheoremViolation(f"{what} is not closed under addition", [sorted(elems)])
    return basis


def linear_structures(b: BoolFn) -> SubspaceBasis:
    """Basis of V(S) = {a : S(x + a) + S(x) is constant}."""
    r = autocorrelation(b)
    full = 1 << b.m
    elems = np.flatnonzero(np.abs(r) == full).tolist()
    return _closed_span(elems, b.m, "set of linear structures")


def is_partially_bent(b: BoolFn) -> bool:
    """Every derivative of S is constant or balanced."""
    r = np.abs(autocorrelation(b))
    return bool(np.all((r == 0) | (r == 1 << b.m)))


def v_space(f: VBF, a: int) -> SubspaceBasis:
    """Basis of V_a = {v : <f_a, v> is constant}, f_a the derivative in direction a."""
    if a == 0:
        raise ValueError("V_a is only defined for a != 0")
    d = f.derivatives[a]
    v = np.arange(f.size)
    comps = parity_table(f.m)[v[:, None] & d[None, :]]
    const = np.all(comps == comps[:, :1], axis=1)
    return _closed_span(np.flatnonzero(const).tolist(), f.m, f"V_{a}")


def n_hat(f: VBF) -> int:
    """max over a != 0 of the number of nonzero v with <f_a, v> constant.

    Counted from the Walsh transform of each DDT row: <f_a, v> is constant
    exactly when |sum_b DDT[a, b] (-1)^<v, b>| = 2^m.
    """
    spectra = np.abs(fwht(ddt(f).counts[1:]))
    return int((spectra[:, 1:] == f.size).sum(axis=1).max())


def components_partially_bent(f: VBF) -> np.ndarray:
    """Boolean flag per component v (bulk version of is_partially_bent)."""
    signs = 1 - 2 * component_matrix(f).astype(np.int64)
    w = fwht(signs)
    r = np.abs(fwht(w * w)) >> f.m
    return np.all((r == 0) | (r == f.size), axis=1)


@dataclass(frozen=True)
class ComponentProfile:
    m: int
    n_hist: dict[int, int]
    n_hat: int
    t: int
    pb_count: int
    quad_count: int
    quad2_count: int

    def n(self, i: int) -> int:
        return self.n_hist.get(i, 0)

    def to_json(self) -> dict:
        return {
            "n_hist": {str(i): c for i, c in sorted(self.n_hist.items())},
            "n_hat": self.n_hat,
            "t": self.t,
            "pb_count": self.pb_count,
            "quad_count": self.quad_count,
            "quad2_count": self.quad2_count,
        }


def n_histogram(f: VBF) -> ComponentProfile:
    """Degree histogram of the nonzero components plus the related counts.

    ``quad_count`` counts components of degree 1 or 2; ``quad2_count`` only
    degree 2. ``t`` is the largest dim V_a.
    """
    degs = component_degrees(f)[1:]
    hist = Counter(degs.tolist())
    t = max(v_space(f, a).dim for a in range(1, f.size))
    pb = components_partially_bent(f)[1:]
    return ComponentProfile(
        m=f.m,
        n_hist={i: hist.get(i, 0) for i in range(f.m + 1)},
        n_hat=n_hat(f),
        t=t,
        pb_count=int(pb.sum()),
        quad_count=int(((degs >= 1) & (degs <= 2)).sum()),
        quad2_count=int((degs == 2).sum()),
    )


def affine_cover(f: VBF, a: int) -> AffineSubspace:
    """(f(a) + f(0)) + V_a^perp, canonical form.

    With f(0) = 0 the offset is f(a); in general it is f_a(0).
    """
    if a == 0:
        raise ValueError("affine cover is only defined for a != 0")
    return AffineSubspace.make(int(f.derivatives[a, 0]), ortho_complement(v_space(f, a)))


def affine_cover_check(f: VBF, a: int) -> bool:
    """The affine hull of Im(f_a) equals the cover built from V_a."""
    hull = affine_hull(np.unique(f.derivatives[a]).tolist(), f.m)
    return hull == affine_cover(f, a)
