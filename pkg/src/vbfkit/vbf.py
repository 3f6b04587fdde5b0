"""Vectorial Boolean functions F_2^m -> F_2^m and their representations.

A function is held as its lookup table. Bit i of an m-bit word is the
coordinate x_{i+1}, so coordinate function f_{i+1} is bit i of the output.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .field import FieldSpec, fast_mul, fe_pow, power_table
from .linalg import dot, rank


@lru_cache(maxsize=None)
def parity_table(m: int) -> np.ndarray:
    """parity_table(m)[x] = popcount(x) mod 2, as uint8."""
    t = np.zeros(1 << m, dtype=np.uint8)
    for i in range(m):
        t[1 << i : 2 << i] = t[: 1 << i] ^ 1
    return t


@lru_cache(maxsize=None)
def weight_table(m: int) -> np.ndarray:
    t = np.zeros(1 << m, dtype=np.int64)
    for i in range(m):
        t[1 << i : 2 << i] = t[: 1 << i] + 1
    return t


def moebius(bits: np.ndarray) -> np.ndarray:
    """Binary Moebius transform along the last axis (self-inverse)."""
    a = np.array(bits, dtype=np.uint8, copy=True)
    n = a.shape[-1]
    h = 1
    while h < n:
        v = a.reshape(a.shape[:-1] + (n // (2 * h), 2, h))
        v[..., 1, :] ^= v[..., 0, :]
        h *= 2
    return a


def fwht(values: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along the last axis."""
    a = np.array(values, dtype=np.int64, copy=True)
    n = a.shape[-1]
    h = 1
    while h < n:
        v = a.reshape(a.shape[:-1] + (n // (2 * h), 2, h))
        lo = v[..., 0, :].copy()
        hi = v[..., 1, :]
        v[..., 0, :] = lo + hi
        v[..., 1, :] = lo - hi
        h *= 2
    return a


def _dim_of(length: int) -> int:
    m = length.bit_length() - 1
    if length < 2 or 1 << m != length:
        raise ValueError(f"table length {length} is not a power of two >= 2")
    return m


@dataclass(frozen=True)
class VBF:
    """A vectorial Boolean function given by its table, table[x] = f(x)."""

    m: int
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != 1 << self.m:
            raise ValueError(f"table has {len(table)} entries, expected {1 << self.m}")
        bad = [v for v in table if not 0 <= v < 1 << self.m]
        if bad:
            raise ValueError(f"entry {bad[0]} is not an {self.m}-bit word")

    @classmethod
    def from_table(cls, table: Sequence[int]) -> VBF:
        return cls(_dim_of(len(table)), tuple(table))

    @classmethod
    def identity(cls, m: int) -> VBF:
        return cls(m, tuple(range(1 << m)))

    @property
    def size(self) -> int:
        return 1 << self.m

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self):
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.table, dtype=np.int64)
        a.flags.writeable = False
        return a

    @cached_property
    def derivatives(self) -> np.ndarray:
        """D[a, x] = f(x ^ a) ^ f(x) for every a (row 0 is all zeros)."""
        x = np.arange(self.size)
        d = self.array[x[None, :] ^ x[:, None]] ^ self.array[None, :]
        d.flags.writeable = False
        return d


@dataclass(frozen=True)
class BoolFn:
    """Truth table of a single Boolean function, bits[x] = S(x)."""

    m: int
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) != 1 << self.m or any(b not in (0, 1) for b in bits):
            raise ValueError(f"not a truth table on {self.m} variables")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BoolFn:
        return cls(_dim_of(len(bits)), tuple(bits))

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)


@dataclass(frozen=True)
class ANFRep:
    """ANF coefficients; coeffs[u] multiplies the monomial prod_{i in u} x_{i+1}."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != 1 << self.m or any(c not in (0, 1) for c in coeffs):
            raise ValueError(f"not an ANF coefficient vector on {self.m} variables")

    def monomials(self) -> list[int]:
        return [u for u, c in enumerate(self.coeffs) if c]


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over GF(2^m); coeffs[d] is the coefficient of x^d."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) > self.spec.size:
            raise ValueError(f"degree exceeds 2^m - 1 = {self.spec.order}")
        if any(not 0 <= c < self.spec.size for c in coeffs):
            raise ValueError("coefficient outside the field")

    @property
    def degree(self) -> int:
        nz = [d for d, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1

    def padded(self) -> tuple[int, ...]:
        return self.coeffs + (0,) * (self.spec.size - len(self.coeffs))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = fast_mul(acc, x, self.spec) ^ c
        return acc


def from_univariate(p: UniPoly) -> VBF:
    return VBF(p.spec.m, tuple(p(x) for x in range(p.spec.size)))


def to_univariate(f: VBF, spec: FieldSpec) -> UniPoly:
    """Interpolate f over all 2^m points.

    With q = 2^m: c_0 = f(0), c_d = sum_x f(x) x^(q-1-d) for 0 < d < q-1,
    and c_(q-1) = sum_x f(x).
    """
    if f.m != spec.m:
        raise ValueError(f"function on m={f.m} interpolated over a field with m={spec.m}")
    q = spec.size
    n = spec.order
    log, exp = spec.log_table, spec.exp_table
    coeffs = [0] * q
    coeffs[0] = f.table[0]
    nonzero = [(log[x], log[y]) for x, y in enumerate(f.table) if x and y]
    for d in range(1, q - 1):
        acc = 0
        for lx, ly in nonzero:
            acc ^= exp[(ly + lx * (n - d)) % n]
        coeffs[d] = acc
    top = 0
    for y in f.table:
        top ^= y
    coeffs[q - 1] = top
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return UniPoly(spec, tuple(coeffs))


def power_function(d: int, spec: FieldSpec) -> VBF:
    """x -> x^d over the field. Any d >= 0 is accepted (0^0 = 1)."""
    return VBF(spec.m, tuple(power_table(d, spec)))


def power_function_slow(d: int, spec: FieldSpec) -> VBF:
    return VBF(spec.m, tuple(fe_pow(x, d, spec) for x in range(spec.size)))


def component(f: VBF, v: int) -> BoolFn:
    """The Boolean function x -> <v, f(x)>."""
    return BoolFn(f.m, tuple(dot(v, y) for y in f.table))


def coordinate(f: VBF, i: int) -> BoolFn:
    """Coordinate f_{i+1}, i.e. bit i of the output."""
    return component(f, 1 << i)


def component_matrix(f: VBF) -> np.ndarray:
    """C[v, x] = <v, f(x)> for every v, as a (2^m, 2^m) uint8 array."""
    v = np.arange(f.size)
    return parity_table(f.m)[v[:, None] & f.array[None, :]]


def anf(b: BoolFn) -> ANFRep:
    return ANFRep(b.m, tuple(moebius(b.array).tolist()))


def anf_inverse(a: ANFRep) -> BoolFn:
    return BoolFn(a.m, tuple(moebius(np.array(a.coeffs, dtype=np.uint8)).tolist()))


def _degree_rows(coeffs: np.ndarray, m: int) -> np.ndarray:
    w = weight_table(m)
    return (coeffs.astype(np.int64) * w).max(axis=-1)


def degree(b: BoolFn) -> int:
    """Largest monomial weight in the ANF; 0 for constants and the zero function."""
    return int(_degree_rows(moebius(b.array), b.m))


def component_degrees(f: VBF) -> np.ndarray:
    """deg(<f, v>) for every v (entry 0 is the zero component, degree 0)."""
    return _degree_rows(moebius(component_matrix(f)), f.m)


def algebraic_degree(f: VBF) -> int:
    return max(degree(coordinate(f, i)) for i in range(f.m))


def exponent_weight(d: int) -> int:
    if d < 0:
        raise ValueError("negative exponent")
    return d.bit_count()


def is_permutation(f: VBF) -> bool:
    return len(set(f.table)) == f.size


def inverse(f: VBF) -> VBF:
    if not is_permutation(f):
        raise ValueError("not a permutation")
    inv = [0] * f.size
    for x, y in enumerate(f.table):
        inv[y] = x
    return VBF(f.m, tuple(inv))


def compose(f: VBF, g: VBF) -> VBF:
    """x -> f(g(x))."""
    return VBF(f.m, tuple(f.table[y] for y in g.table))


def add(f: VBF, g: VBF) -> VBF:
    return VBF(f.m, tuple(a ^ b for a, b in zip(f.table, g.table)))


def normalize_zero(f: VBF) -> VBF:
    """Shift outputs so that f(0) = 0; degrees >= 1 and derivatives are unchanged."""
    c = f.table[0]
    return VBF(f.m, tuple(y ^ c for y in f.table))


@dataclass(frozen=True)
class AffineMap:
    """x -> Mx + c over F_2^m; ``matrix[i]`` is the row mask producing output bit i."""

    m: int
    matrix: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(int(r) for r in self.matrix))
        if len(self.matrix) != self.m:
            raise ValueError(f"matrix needs {self.m} rows")
        if any(r >> self.m for r in self.matrix) or self.offset >> self.m:
            raise ValueError(f"matrix or offset exceeds {self.m} bits")

    @classmethod
    def identity(cls, m: int, offset: int = 0) -> AffineMap:
        return cls(m, tuple(1 << i for i in range(m)), offset)

    @classmethod
    def zero(cls, m: int) -> AffineMap:
        return cls(m, (0,) * m)

    @property
    def invertible(self) -> bool:
        return rank(self.matrix) == self.m

    def linear(self, x: int) -> int:
        y = 0
        for i, row in enumerate(self.matrix):
            y |= dot(row, x) << i
        return y

    def __call__(self, x: int) -> int:
        return self.linear(x) ^ self.offset

    def table(self) -> list[int]:
        return [self(x) for x in range(1 << self.m)]

    def columns(self) -> list[int]:
        return [self.linear(1 << j) for j in range(self.m)]

    def compose(self, inner: AffineMap) -> AffineMap:
        """self after inner, as a single affine map."""
        cols = [self.linear(c) for c in inner.columns()]
        rows = tuple(sum(((c >> i) & 1) << j for j, c in enumerate(cols)) for i in range(self.m))
        return AffineMap(self.m, rows, self(inner.offset))


@dataclass(frozen=True)
class EATriple:
    """g = outer o f o inner + additive; outer and inner must be invertible."""

    outer: AffineMap
    inner: AffineMap
    additive: AffineMap

    def __post_init__(self):
        if not (self.outer.invertible and self.inner.invertible):
            raise ValueError("outer and inner maps of an EA triple must be invertible")


def apply_affine(f: VBF, D: AffineMap, C: AffineMap) -> VBF:
    """g(x) = D(f(C(x))), offsets included in both maps."""
    dt, ct = D.table(), C.table()
    return VBF(f.m, tuple(dt[f.table[ct[x]]] for x in range(f.size)))


def apply_ea(f: VBF, t: EATriple) -> VBF:
    g = apply_affine(f, t.outer, t.inner)
    at = t.additive.table()
    return VBF(f.m, tuple(y ^ at[x] for x, y in enumerate(g.table)))
