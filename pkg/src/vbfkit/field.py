"""Arithmetic in GF(2^m) = GF(2)[x]/(p(x)).

Elements are plain ints in ``[0, 2^m)``; bit k is the coefficient of x^k.
Addition is XOR. Multiplication is a carryless product reduced modulo the
field polynomial; exp/log tables over the generator are built lazily and
used only as a fast path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

MAX_M = 16

# Pinned primitive polynomials, one per degree. Truth tables of power maps
# depend on this choice; m=4 must be x^4+x+1 so that e^4 = e + 1.
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

MODULUS_ENV = "VBF_DEFAULT_FIELD_MOD"


class FieldError(ValueError):
    pass


def poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b as GF(2)[x] polynomials."""
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    deg = p.bit_length() - 1
    if deg < 1:
        return False
    for q in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(p, q) == 0:
            return False
    return True


def clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(2^m) fixed by its degree and modulus mask.

    ``generator`` defaults to the class of x when that is primitive, and to
    the smallest primitive element otherwise.
    """

    m: int
    modulus: int
    generator: int | None = None

    def __post_init__(self):
        if not 1 <= self.m <= MAX_M:
            raise FieldError(f"field degree m={self.m} outside 1..{MAX_M}")
        if self.modulus.bit_length() - 1 != self.m or not self.modulus & 1:
            raise FieldError(
                f"modulus {self.modulus:#x} is not a degree-{self.m} polynomial with constant term"
            )
        if not is_irreducible(self.modulus):
            raise FieldError(f"modulus {self.modulus:#x} is reducible over GF(2)")
        if self.generator is None:
            if self.m > 1 and self.is_primitive(2):
                gen = 2
            else:
                gen = next(g for g in range(1, self.size) if self.is_primitive(g))
            object.__setattr__(self, "generator", gen)
        elif not self.is_primitive(self.generator):
            raise FieldError(f"generator {self.generator:#x} is not primitive")

    @property
    def size(self) -> int:
        return 1 << self.m

    @property
    def order(self) -> int:
        """Order of the multiplicative group, 2^m - 1."""
        return (1 << self.m) - 1

    def is_primitive(self, g: int) -> bool:
        if not 0 < g < self.size:
            return False
        n = self.order
        if fe_pow(g, n, self) != 1:
            return False
        return all(fe_pow(g, n // p, self) != 1 for p in prime_factors(n))

    @cached_property
    def exp_table(self) -> list[int]:
        """exp_table[k] = generator^k for 0 <= k < 2(2^m - 1)."""
        out = [1] * (2 * self.order)
        x = 1
        for k in range(self.order):
            out[k] = out[k + self.order] = x
            x = fe_mul(x, self.generator, self)
        return out

    @cached_property
    def log_table(self) -> list[int]:
        """log_table[a] = k with generator^k = a; entry 0 is unused (-1)."""
        out = [-1] * self.size
        for k in range(self.order):
            out[self.exp_table[k]] = k
        return out

    def __str__(self):
        return f"m={self.m}, mod={self.modulus:#x}"


def _check(a: int, spec: FieldSpec):
    if not 0 <= a < spec.size:
        raise FieldError(f"{a} is not an element of GF(2^{spec.m})")


def fe_mul(a: int, b: int, spec: FieldSpec) -> int:
    _check(a, spec)
    _check(b, spec)
    return poly_mod(clmul(a, b), spec.modulus)


def fe_pow(a: int, d: int, spec: FieldSpec) -> int:
    """Square-and-multiply; fe_pow(a, 0) == 1 for every a, including 0."""
    if d < 0:
        raise FieldError("negative exponent")
    _check(a, spec)
    result, base = 1, a
    while d:
        if d & 1:
            result = fe_mul(result, base, spec)
        base = fe_mul(base, base, spec)
        d >>= 1
    return result


def fe_inv(a: int, spec: FieldSpec) -> int:
    if a == 0:
        raise ZeroDivisionError("no inverse of zero")
    return fe_pow(a, spec.order - 1, spec)


def fast_mul(a: int, b: int, spec: FieldSpec) -> int:
    """Table-driven product; agrees with fe_mul on the whole field."""
    if a == 0 or b == 0:
        return 0
    return spec.exp_table[spec.log_table[a] + spec.log_table[b]]


def power_table(d: int, spec: FieldSpec) -> list[int]:
    """Values of x -> x^d at every field element (0^0 taken as 1)."""
    if d < 0:
        raise FieldError("negative exponent")
    n = spec.order
    if d == 0:
        return [1] * spec.size
    e = d % n
    log, exp = spec.log_table, spec.exp_table
    return [0] + [exp[(log[x] * e) % n] for x in range(1, spec.size)]


def _env_overrides() -> dict[int, int]:
    raw = os.environ.get(MODULUS_ENV, "").strip()
    out = {}
    if not raw:
        return out
    for item in raw.split(","):
        try:
            m, mod = item.split("=")
            out[int(m)] = int(mod, 16)
        except ValueError as exc:
            raise FieldError(f"bad {MODULUS_ENV} entry {item!r}; expected M=0xHEX") from exc
    return out


def default_modulus(m: int) -> FieldSpec:
    """Pinned field for degree m; ``VBF_DEFAULT_FIELD_MOD`` ("4=0x13,8=0x11b") overrides entries."""
    if m not in DEFAULT_MODULI:
        raise FieldError(f"unsupported field degree m={m}; supported 1..{MAX_M}")
    mod = _env_overrides().get(m, DEFAULT_MODULI[m])
    return FieldSpec(m, mod)
