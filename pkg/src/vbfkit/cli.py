"""Command-line front end.

Exit codes: 0 success (checks all pass or skip), 1 a check failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import __version__, corpus
from .differential import (
    differential_spectrum, differential_uniformity, min_image, weak_delta_for, weak_delta_pow2_for,
)
from .errors import ParseError
from .field import FieldError, FieldSpec, default_modulus
from .formats import emit_lut, parse_anf, parse_field, parse_lut, parse_univariate
from .linear import n_hat
from .report import MAX_ANALYZE_M, dumps, envelope
from .sampling import random_permutation, sample_filtered
from .theorems import CHECKS, FAIL, run_check
from .vbf import VBF, from_univariate, is_permutation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _sniff(text: str) -> str:
    s = text.lstrip()
    if s.startswith("poly:"):
        return "univariate"
    if s[:1] in ("f", "F") and "=" in s.split("\n", 1)[0]:
        return "anf"
    return "lut"


def load_input(args) -> tuple[VBF, str, FieldSpec | None, str]:
    """(function, format, field, source label) from the analyze flags."""
    spec = parse_field(args.field) if args.field else None
    if args.corpus:
        fmt, text = corpus.source(args.corpus)
        f = corpus.load(args.corpus)
        if fmt == "univariate":
            spec = parse_univariate(text).spec
        return f, fmt, spec, f"corpus:{args.corpus}"
    if args.sbox:
        return parse_lut(args.sbox), "lut", spec, "sbox"
    if args.poly:
        p = parse_univariate(args.poly, spec)
        return from_univariate(p), "univariate", p.spec, "poly"
    if args.anf_file:
        return parse_anf(_read(args.anf_file)), "anf", spec, args.anf_file
    text = _read(args.file)
    fmt = _sniff(text)
    if fmt == "univariate":
        p = parse_univariate(text, spec)
        return from_univariate(p), fmt, p.spec, args.file
    if fmt == "anf":
        return parse_anf(text), fmt, spec, args.file
    return parse_lut(text), fmt, spec, args.file


def _print_analysis(env: dict, out):
    d, c = env["differential"], env["components"]
    inp = env["input"]
    rows = [
        ("input", f"{inp['format']} ({inp['source']})"),
        ("m", inp["m"]),
        ("modulus", inp["modulus"] or "-"),
        ("permutation", env["permutation"]),
        ("algebraic degree", env["algebraic_degree"]),
        ("delta", d["delta"]),
        ("apn", d["apn"]),
        ("min image", d["min_image"]),
        ("weak delta", d["weak_delta"]),
        ("weak delta (2^r)", d["weak_delta_pow2"]),
        ("weakly apn", d["weakly_apn"]),
        ("n_hat", c["n_hat"]),
        ("t", c["t"]),
        ("n_i", " ".join(f"n{i}={k}" for i, k in c["n_hist"].items())),
        ("partially bent", c["pb_count"]),
        ("quadratic (deg 1-2)", c["quad_count"]),
        ("quadratic (deg 2)", c["quad2_count"]),
        ("affine cover holds", env["affine_cover"]["all_hold"]),
    ]
    for k, v in rows:
        print(f"{k:<20} {v}", file=out)
    print(f"\n{'a':>4} {'|Im|':>6} {'coset':>6}", file=out)
    for row in d["per_a"]:
        print(f"{row['a']:>4} {row['image_size']:>6} {str(row['is_coset']):>6}", file=out)


def cmd_analyze(args, out) -> int:
    f, fmt, spec, label = load_input(args)
    if f.m > MAX_ANALYZE_M:
        raise UsageError(f"exhaustive analysis capped at m={MAX_ANALYZE_M}")
    env = envelope(f, fmt, spec, label)
    if args.json:
        out.write(dumps(env))
    else:
        _print_analysis(env, out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    ids = sorted(CHECKS) if args.theorem_id == "all" else [args.theorem_id]
    if args.theorem_id != "all" and args.theorem_id not in CHECKS:
        raise UsageError(f"unknown theorem id {args.theorem_id!r}; valid ids: all, {', '.join(sorted(CHECKS))}")
    fixtures = args.corpus or None
    for name in fixtures or ():
        if name not in corpus.FIXTURES:
            raise UsageError(f"unknown corpus fixture {name!r}; known: {', '.join(corpus.names())}")
    results = [run_check(i, fixtures=fixtures, seed=args.seed, sample=args.sample, m=args.m) for i in ids]
    out.write(dumps([r.to_json() for r in results]))
    return EXIT_FAIL if any(r.verdict == FAIL for r in results) else EXIT_OK


def cmd_spectrum(args, out) -> int:
    if not 1 <= args.m <= 12:
        raise UsageError("spectrum supports 1 <= m <= 12")
    spec = FieldSpec(args.m, int(args.mod, 16)) if args.mod else default_modulus(args.m)
    s = differential_spectrum(args.exponent, spec)
    size = s.image_size
    result = {
        "exponent": args.exponent,
        "m": args.m,
        "modulus": f"{spec.modulus:#x}",
        "omega": s.to_json(),
        "image_size": size,
        "weak_delta": weak_delta_for(size, args.m),
        "weak_delta_pow2": weak_delta_pow2_for(size, args.m),
        "weakly_apn": 4 * size > 1 << args.m,
    }
    if args.json:
        out.write(dumps(result))
        return EXIT_OK
    print(f"x^{args.exponent} over GF(2^{args.m}), modulus {spec.modulus:#x}", file=out)
    print(f"{'i':>6} {'omega_i':>8}", file=out)
    for i, n in s.omega.items():
        print(f"{i:>6} {n:>8}", file=out)
    for k in ("image_size", "weak_delta", "weak_delta_pow2", "weakly_apn"):
        print(f"{k:<16} {result[k]}", file=out)
    return EXIT_OK


PREDICATES = {
    "weakly-apn": lambda f: 4 * min_image(f) > f.size,
    "apn": lambda f: differential_uniformity(f) == 2,
    "n-hat-zero": lambda f: n_hat(f) == 0,
    "not-weakly-apn-permutation": lambda f: 4 * min_image(f) <= f.size,
}


def cmd_search(args, out) -> int:
    if args.m not in (3, 4):
        raise UsageError("search supports m = 3 or 4")
    rng = random.Random(args.seed)
    found = sample_filtered(lambda r: random_permutation(args.m, r), PREDICATES[args.predicate],
                            args.count, rng, args.budget)
    items = []
    for f in found.accepted:
        lo = min_image(f)
        items.append({
            "lut": emit_lut(f),
            "permutation": is_permutation(f),
            "delta": differential_uniformity(f),
            "min_image": lo,
            "weak_delta": weak_delta_for(lo, f.m),
            "weakly_apn": 4 * lo > f.size,
            "n_hat": n_hat(f),
        })
    result = {"m": args.m, "predicate": args.predicate, "seed": args.seed, "requested": args.count,
              "found": len(items), "drawn": found.drawn, "budget": args.budget, "items": items}
    if args.json:
        out.write(dumps(result))
        return EXIT_OK
    for it in items:
        print(f"{it['lut']}  delta={it['delta']} min_image={it['min_image']} "
              f"weak_delta={it['weak_delta']} n_hat={it['n_hat']}", file=out)
    print(f"found {len(items)} of {args.count} after {found.drawn} draws (budget {args.budget})", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vbfkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"vbfkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full differential and component report for one S-box")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--sbox", help="hex lookup table")
    src.add_argument("--file", help="file holding a LUT, ANF lines or a univariate form")
    src.add_argument("--poly", help="univariate coefficients (hex, low to high) or 'poly: ...; field: ...'")
    src.add_argument("--anf-file", help="file with lines 'f1 = x1x2 + ...'")
    src.add_argument("--corpus", choices=corpus.names(), help="built-in fixture")
    a.add_argument("--field", help="field for --poly, e.g. m=4,mod=0x13")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="run theorem checks; prints a JSON array")
    c.add_argument("theorem_id", help="'all' or one of: " + ", ".join(sorted(CHECKS)))
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--sample", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--corpus", action="append", help="restrict to fixture(s); repeatable")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("spectrum", help="differential spectrum of x^d")
    s.add_argument("--exponent", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--mod", help="modulus as hex mask, e.g. 0x13")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    r = sub.add_parser("search", help="seeded random permutations satisfying a predicate")
    r.add_argument("--m", type=int, default=4)
    r.add_argument("--predicate", choices=sorted(PREDICATES), default="weakly-apn")
    r.add_argument("--count", type=int, default=1)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--budget", type=int, default=50_000, help="maximum number of draws")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_search)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, FieldError, UsageError, ValueError) as exc:
        print(f"vbfkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
