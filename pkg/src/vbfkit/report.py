"""JSON report envelope shared by the CLI and the golden-file tests."""

from __future__ import annotations

import json

from . import __version__
from .differential import weak_uniformity
from .field import FieldSpec
from .linear import affine_cover_check, n_histogram
from .vbf import VBF, algebraic_degree, is_permutation

SCHEMA = "vbfkit.report/1"
MAX_ANALYZE_M = 8


def analyze(f: VBF) -> dict:
    """Every metric of the report body (no input echo)."""
    if f.m > MAX_ANALYZE_M:
        raise ValueError(f"exhaustive analysis capped at m={MAX_ANALYZE_M}")
    diff = weak_uniformity(f)
    prof = n_histogram(f)
    cover = [affine_cover_check(f, a) for a in range(1, f.size)]
    return {
        "permutation": is_permutation(f),
        "algebraic_degree": algebraic_degree(f),
        "differential": {**diff.to_json(), "apn": diff.apn},
        "components": prof.to_json(),
        "affine_cover": {"all_hold": all(cover), "failing_a": [a for a, ok in enumerate(cover, 1) if not ok]},
    }


def envelope(f: VBF, fmt: str, spec: FieldSpec | None = None, source: str | None = None,
             theorems: list | None = None) -> dict:
    env = {
        "schema": SCHEMA,
        "tool": f"vbfkit {__version__}",
        "input": {
            "format": fmt,
            "m": f.m,
            "modulus": f"{spec.modulus:#x}" if spec else None,
            "source": source,
        },
        **analyze(f),
    }
    if theorems is not None:
        env["theorems"] = [t.to_json() for t in theorems]
    return env


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
