"""Text formats for S-boxes.

* hex LUT: one hex digit per entry, contiguous, for m <= 4 ("0123...EF");
  comma-separated hex tokens for larger m ("00,1F,...").
* ANF lines: ``f1 = x1x2x3 + x2 + 1``, one line per coordinate; f_i is
  output bit i-1 and x_j is input bit j-1.
* univariate: ``poly: c0,c1,...; field: m=4, mod=0x13`` with hex
  coefficients from the constant term upwards.

``emit_*`` produce the canonical spelling; ``parse_*(emit_*(f)) == f``.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field import FieldError, FieldSpec, default_modulus
from .vbf import VBF, ANFRep, UniPoly, anf, anf_inverse, coordinate, from_univariate


def emit_lut(f: VBF) -> str:
    if f.m <= 4:
        return "".join(f"{y:X}" for y in f.table)
    width = (f.m + 3) // 4
    return ",".join(f"{y:0{width}X}" for y in f.table)


def parse_lut(text: str) -> VBF:
    s = text.strip()
    if not s:
        raise ParseError("empty lookup table")
    if "," in s:
        tokens, cols, col = [], [], 1
        for tok in s.split(","):
            lead = len(tok) - len(tok.lstrip())
            tokens.append(tok.strip())
            cols.append(col + lead)
            col += len(tok) + 1
    else:
        tokens = list(s)
        cols = list(range(1, len(s) + 1))
    values = []
    for tok, col in zip(tokens, cols):
        try:
            values.append(int(tok, 16))
        except ValueError:
            raise ParseError(f"invalid hex token {tok!r}", 1, col) from None
    n = len(values)
    if n < 2 or n & (n - 1):
        raise ParseError(f"{n} entries; a lookup table needs 2^m entries", 1, 1)
    m = n.bit_length() - 1
    for v, col in zip(values, cols):
        if v >> m:
            raise ParseError(f"entry {v:#x} does not fit in {m} bits", 1, col)
    return VBF(m, tuple(values))


def _monomial_str(u: int) -> str:
    if u == 0:
        return "1"
    return "".join(f"x{j + 1}" for j in range(u.bit_length()) if u >> j & 1)


def _monomial_key(u: int):
    # higher degree first, then by variable indices
    return (-u.bit_count(), [j for j in range(u.bit_length()) if u >> j & 1])


def emit_anf(f: VBF) -> str:
    lines = []
    for i in range(f.m):
        monos = sorted(anf(coordinate(f, i)).monomials(), key=_monomial_key)
        rhs = " + ".join(_monomial_str(u) for u in monos) or "0"
        lines.append(f"f{i + 1} = {rhs}")
    return "\n".join(lines) + "\n"


_LHS = re.compile(r"\s*f_?(\d+)\s*=")
_MONO = re.compile(r"(?:x_?(\d+)\s*\*?\s*)+")
_VAR = re.compile(r"x_?(\d+)")


def _parse_monomial(tok: str, lineno: int, col: int) -> int:
    t = tok.strip()
    if t == "1":
        return 0
    if not _MONO.fullmatch(t):
        raise ParseError(f"invalid monomial {t!r}", lineno, col)
    u = 0
    for j in _VAR.findall(t):
        idx = int(j)
        if idx < 1:
            raise ParseError("variables are numbered from x1", lineno, col)
        u |= 1 << (idx - 1)
    return u


def parse_anf(text: str, m: int | None = None) -> VBF:
    coeff_sets: dict[int, set[int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        head = _LHS.match(body)
        if not head:
            raise ParseError("expected 'f<i> = ...'", lineno, 1)
        i = int(head.group(1))
        if i < 1 or i in coeff_sets:
            raise ParseError(f"coordinate f{i} invalid or repeated", lineno, head.start(1) + 1)
        monos: set[int] = set()
        rhs_start = head.end()
        rhs = body[rhs_start:]
        if rhs.strip() not in ("", "0"):
            col = rhs_start + 1
            for tok in rhs.split("+"):
                u = _parse_monomial(tok, lineno, col + len(tok) - len(tok.lstrip()))
                monos ^= {u}
                col += len(tok) + 1
        coeff_sets[i] = monos
    if not coeff_sets:
        raise ParseError("no coordinate functions found")
    if m is None:
        m = max(coeff_sets)
    missing = [i for i in range(1, m + 1) if i not in coeff_sets]
    if missing or max(coeff_sets) > m:
        raise ParseError(f"need exactly coordinates f1..f{m}; missing {missing}")
    top = max((u.bit_length() for s in coeff_sets.values() for u in s), default=0)
    if top > m:
        raise ParseError(f"variable x{top} exceeds dimension {m}")
    table = [0] * (1 << m)
    for i, monos in coeff_sets.items():
        coeffs = [0] * (1 << m)
        for u in monos:
            coeffs[u] = 1
        bits = anf_inverse(ANFRep(m, tuple(coeffs))).bits
        for x, b in enumerate(bits):
            table[x] |= b << (i - 1)
    return VBF(m, tuple(table))


def parse_field(text: str) -> FieldSpec:
    """``m=4, mod=0x13`` (mod optional, defaults to the pinned table)."""
    kv = {}
    for part in re.split(r"[,\s]+", text.strip()):
        if not part:
            continue
        if "=" not in part:
            raise ParseError(f"expected key=value in field description, got {part!r}")
        k, v = part.split("=", 1)
        kv[k.strip().lower()] = v.strip()
    try:
        m = int(kv["m"])
        if "mod" in kv:
            return FieldSpec(m, int(kv["mod"], 16))
        return default_modulus(m)
    except KeyError:
        raise ParseError("field description needs m=<degree>") from None
    except (ValueError, FieldError) as exc:
        raise ParseError(str(exc)) from None


def emit_univariate(p: UniPoly) -> str:
    cs = list(p.coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    coeffs = ",".join(f"{c:x}" for c in cs) or "0"
    return f"poly: {coeffs}; field: m={p.spec.m}, mod={p.spec.modulus:#x}"


def parse_coefficients(text: str, spec: FieldSpec) -> UniPoly:
    coeffs = []
    for k, tok in enumerate(text.split(",")):
        try:
            coeffs.append(int(tok.strip(), 16))
        except ValueError:
            raise ParseError(f"invalid hex coefficient {tok.strip()!r} (position {k})") from None
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs == [0]:
        coeffs = []
    try:
        return UniPoly(spec, tuple(coeffs))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_univariate(text: str, spec: FieldSpec | None = None) -> UniPoly:
    """Parse ``poly: ...; field: ...`` or a bare coefficient list with ``spec`` given."""
    s = text.strip()
    field_part = None
    if ";" in s:
        s, field_part = (p.strip() for p in s.split(";", 1))
        if not field_part.startswith("field:"):
            raise ParseError("expected 'field:' after ';'", 1, len(s) + 2)
        field_part = field_part[len("field:"):]
    if s.startswith("poly:"):
        s = s[len("poly:"):]
    if field_part is not None:
        spec = parse_field(field_part)
    if spec is None:
        raise ParseError("univariate input needs a field (m=..., mod=...)")
    return parse_coefficients(s, spec)


def vbf_from_univariate_text(text: str, spec: FieldSpec | None = None) -> VBF:
    return from_univariate(parse_univariate(text, spec))
