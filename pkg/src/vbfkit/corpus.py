"""Built-in fixtures: the non-monomial 4-bit pair with differing weak
uniformity, three 4-bit S-boxes given by ANF, and a few power maps.
"""

from __future__ import annotations

from .field import default_modulus, fe_pow
from .formats import emit_lut, emit_univariate, parse_anf
from .vbf import VBF, UniPoly, from_univariate, power_function

GF16 = default_modulus(4)


def _e(k: int) -> int:
    return fe_pow(GF16.generator, k, GF16)


def _poly(terms: dict[int, int]) -> UniPoly:
    """terms maps degree -> exponent k of the coefficient e^k."""
    coeffs = [0] * 15
    for deg, k in terms.items():
        coeffs[deg] = _e(k)
    return UniPoly(GF16, tuple(coeffs))


# degree: power of e in the coefficient (e^0 = 1); x^4 absent in the first map
PAIR_F_TERMS = {
    14: 0, 13: 10, 12: 1, 11: 2, 10: 9, 9: 8, 8: 3, 7: 5,
    6: 5, 5: 11, 3: 8, 2: 10, 1: 1, 0: 12,
}
PAIR_FINV_TERMS = {
    14: 0, 13: 10, 12: 14, 11: 8, 10: 7, 9: 10, 8: 0, 7: 5,
    6: 14, 5: 2, 4: 7, 3: 5, 2: 14, 1: 11, 0: 14,
}

ANF_SBOX_1 = """\
f1 = x1x2x3 + x2x3x4 + x1x3 + x2x3 + x1 + x2 + x3 + x4
f2 = x1x2x4 + x1x2 + x1x3 + x2x3 + x2x4 + x4
f3 = x1x3x4 + x1x2 + x1x3 + x1x4 + x3 + x4
f4 = x2x3x4 + x1x4 + x2x4 + x2 + x3x4 + x3 + x4
"""

ANF_SBOX_2 = """\
f1 = x1x3x4 + x2x3x4 + x2x3 + x2x4 + x3x4 + x1
f2 = x1x2x4 + x1x3 + x1x4 + x2x3 + x2
f3 = x1x2x3 + x1x2x4 + x1x3x4 + x2x3x4 + x1x2 + x3x4 + x3
f4 = x2x3x4 + x1x2 + x1x4 + x2x3 + x4
"""

ANF_SBOX_3 = """\
f1 = x1x2x3 + x1x2x4 + x1x3 + x1 + x2x3x4 + x2x3 + x3x4
f2 = x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x2
f3 = x1x2x4 + x1x2 + x1x3x4 + x1x3 + x2x4 + x3
f4 = x1x3 + x1x4 + x2x3x4 + x2x4 + x4
"""


def pair_f_poly() -> UniPoly:
    return _poly(PAIR_F_TERMS)


def pair_finv_poly() -> UniPoly:
    return _poly(PAIR_FINV_TERMS)


def _power(d: int, m: int):
    return lambda: power_function(d, default_modulus(m))


FIXTURES = {
    "remark27_f": lambda: from_univariate(pair_f_poly()),
    "remark27_finv": lambda: from_univariate(pair_finv_poly()),
    "sec7_example1": lambda: parse_anf(ANF_SBOX_1),
    "sec7_example2": lambda: parse_anf(ANF_SBOX_2),
    "sec7_example3": lambda: parse_anf(ANF_SBOX_3),
    "pow_d11_m6": _power(11, 6),
    "pow_d13_m6": _power(13, 6),
    **{f"pow_d3_m{m}": _power(3, m) for m in range(3, 9)},
}

ANF_SBOXES = ("sec7_example1", "sec7_example2", "sec7_example3")
_ANF_TEXT = dict(zip(ANF_SBOXES, (ANF_SBOX_1, ANF_SBOX_2, ANF_SBOX_3)))


def names() -> list[str]:
    return list(FIXTURES)


def load(name: str) -> VBF:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown corpus fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def source(name: str) -> tuple[str, str]:
    """(format, text) of the fixture as it is defined."""
    if name == "remark27_f":
        return "univariate", emit_univariate(pair_f_poly())
    if name == "remark27_finv":
        return "univariate", emit_univariate(pair_finv_poly())
    if name in ANF_SBOXES:
        return "anf", _ANF_TEXT[name]
    return "lut", emit_lut(load(name))
