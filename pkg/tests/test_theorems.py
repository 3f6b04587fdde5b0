import json
from math import gcd

import pytest

from vbfkit import corpus
from vbfkit.field import default_modulus
from vbfkit.linear import n_hat, v_space
from vbfkit.differential import differential_spectrum, is_weakly_apn, min_image, weak_uniformity
from vbfkit.formats import parse_lut
from vbfkit.theorems import (
    FAIL,
    PASS,
    SKIPPED,
    CHECKS,
    _w,
    check_affine_cover,
    check_fact4_and_bounds,
    check_invariance,
    check_kasami,
    check_kyu07,
    check_noncoset,
    check_noncoset_sweep,
    check_power_image,
    check_power_inverse,
    check_quadratic_equiv,
    check_spectrum_lemma,
    check_th_wapn,
    demo_ccz_noninvariance,
    kasami_exponent,
    run_check,
)
from vbfkit.vbf import VBF, exponent_weight, power_function


def test_invariance_checks():
    assert check_invariance(VBF.identity(3), "affine", 20).verdict == PASS
    f = corpus.load("remark27_f")
    assert check_invariance(f, "affine", 100).verdict == PASS
    assert check_invariance(f, "ea", 100).verdict == PASS
    with pytest.raises(ValueError):
        check_invariance(f, "ccz")


def test_ccz_witness_and_non_witnesses():
    r = demo_ccz_noninvariance()
    assert r.verdict == PASS and r.details["witness"]
    assert r.details["f"]["weakly_apn"] and not r.details["finv"]["weakly_apn"]
    cube = power_function(3, default_modulus(3))
    assert demo_ccz_noninvariance(cube).verdict == SKIPPED
    assert demo_ccz_noninvariance(VBF.identity(4)).verdict == SKIPPED


def test_noncoset_examples():
    assert check_noncoset(corpus.load("remark27_f")).verdict == PASS
    r = check_noncoset(power_function(11, default_modulus(6)))
    assert r.verdict == PASS and r.details["power_exponent"] == 11
    assert r.details["coset_directions"] == []
    assert check_noncoset(power_function(3, default_modulus(3))).verdict == SKIPPED


def test_noncoset_sweep_small():
    r = check_noncoset_sweep(sample=100, max_power_m=6)
    assert r.verdict == PASS and r.details["tested"] > 0


def test_spectrum_lemma_examples():
    s3 = default_modulus(3)
    assert differential_spectrum(3, s3).omega == differential_spectrum(5, s3).omega
    s4 = default_modulus(4)
    assert differential_spectrum(7, s4).omega == differential_spectrum(14, s4).omega
    assert check_spectrum_lemma(6).verdict == PASS


def test_power_checks():
    for m in range(2, 7):
        assert check_power_image(m).verdict == PASS
        assert check_power_inverse(m).verdict == PASS


def test_kasami_examples():
    assert kasami_exponent(2) == 13
    r = check_kasami(2, 6)
    assert r.verdict == PASS and set(map(int, r.details["spectrum"])) == {0, 4}
    r = check_kasami(1, 3)
    assert r.verdict == PASS and set(map(int, r.details["spectrum"])) == {0, 2}
    assert check_kasami(2, 4).verdict == SKIPPED


def test_constant_component_examples():
    assert v_space(power_function(7, default_modulus(4)), 1).dim == 0
    assert v_space(power_function(3, default_modulus(5)), 1).dim > 0


@pytest.mark.parametrize("m", range(3, 9))
def test_constant_component_sweep_violations_are_linear_exponents(m):
    # the sweep over all power permutations flags exactly the exponents of
    # weight 1 (x^(2^i) is linear, so its derivative is constant)
    r = check_kyu07(m)
    bad = sorted(w["d"] for w in r.witnesses)
    assert bad == [1 << i for i in range(m)]
    assert r.verdict == FAIL and r.details["violations_all_linear"]
    for w in r.witnesses:
        f = power_function(w["d"], default_modulus(m))
        assert v_space(f, 1).dim == m  # re-check the witness standalone


@pytest.mark.parametrize("m", range(3, 9))
def test_constant_component_equivalence_for_nonlinear_exponents(m):
    spec = default_modulus(m)
    for d in range(1, spec.order):
        if gcd(d, spec.order) != 1 or exponent_weight(d) < 2:
            continue
        has_const = v_space(power_function(d, spec), 1).dim > 0
        assert has_const == (exponent_weight(d) == 2), d


def test_th_wapn_parts():
    r = check_th_wapn(sample=2000, seed=0, max_m=6)
    assert r.verdict == PASS
    assert r.details["i"]["n_hat_zero"] == 0 and r.details["i"]["verdict"] == SKIPPED
    assert r.details["ii"]["verdict"] == PASS and r.details["ii"]["violations"] == 0
    w = r.details["iii"]["smallest_witness"]
    assert (w["m"], w["t"], w["d"]) == (6, 1, 13)
    f = power_function(w["d"], default_modulus(w["m"]))
    assert n_hat(f) == 0 and not is_weakly_apn(f) and weak_uniformity(f).weak_delta_pow2 == 4


def test_fact4_examples_and_small_sweep():
    p1 = corpus.load("sec7_example1")
    assert n_hat(p1) == 0
    r = check_fact4_and_bounds(sample=100, seed=0, m6_sample=5)
    assert r.verdict == PASS and r.details["m4_accepted"] == 100


def test_quadratic_equiv_small():
    r = check_quadratic_equiv(sample=300, seed=1)
    assert r.verdict == PASS
    assert r.details["3"]["apn"] > 0


def test_affine_cover_small():
    assert check_affine_cover(sample=50).verdict == PASS


def test_determinism():
    a = run_check("fact4_bounds", seed=3, sample=30).to_json()
    b = run_check("fact4_bounds", seed=3, sample=30).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert run_check("kyu07", m=4).to_json() == run_check("kyu07", m=4).to_json()


def test_fail_verdicts_carry_rerunnable_witnesses():
    r = run_check("kyu07", m=5)
    assert r.verdict == FAIL and r.witnesses
    for w in r.witnesses:
        assert w["weight"] == 1 and w["constant_component"]


def test_run_check_registry():
    with pytest.raises(KeyError, match="valid ids"):
        run_check("bogus_id")
    assert "weaknotAPNcoset" in CHECKS
    r = run_check("weaknotAPNcoset", fixtures=["remark27_f"])
    assert r.verdict == PASS


def test_witness_lut_round_trip():
    # witnesses are spelled as LUTs that parse back to the same function
    f = corpus.load("remark27_finv")
    assert parse_lut(_w(f)["lut"]) == f
    assert min_image(parse_lut(_w(f)["lut"])) == 4
