from fractions import Fraction

import pytest

robp = pytest.importorskip("robp")

FORMULA = {"n": 6, "Q": [[1, 2], [3]], "R": [[4, 5, 6]], "c": "010101"}


def test_compile_matches_formula():
    bp = robp.compile_formula(FORMULA)
    assert robp.validate(bp) is None
    assert robp.acceptance_probability(bp) == Fraction(35, 64)
    assert robp.formula_acceptance(FORMULA) == Fraction(35, 64)
    for x in range(64):
        bits = format(x, "06b")
        assert robp.evaluate(bp, bits) == robp.eval_formula(FORMULA, bits)


def test_random_program_probabilities():
    bp = robp.random_robp(8, seed=3, oblivious=False)
    assert robp.acceptance_probability(bp) == robp.brute_force_acceptance(bp)
    dist = robp.distributions(bp)
    assert dist[0] == [Fraction(1)]
    assert all(sum(level) == 1 for level in dist)


def test_normalize_keeps_function():
    bp = robp.random_robp(7, seed=5)
    out = robp.normalize(bp, pad_width=True)
    for x in range(128):
        bits = format(x, "07b")
        assert robp.evaluate(bp, bits) == robp.evaluate(out, bits)


def test_sample_space_and_bias():
    assert robp.irreducible_poly(8) == 0x11B
    a = robp.aghp_powering(10, 8)
    assert len(a) == 1 << 16
    assert robp.max_bias(a) <= Fraction(9, 256)
    assert robp.kwise_deviation(a, 4) <= robp.max_bias(a)
    assert len(robp.hamming_ball("0" * 10, 3)) == 176


def test_parameters():
    assert robp.richness_params("1/2", 16)["C"] == 9
    assert robp.richness_params(Fraction(5, 6), 16)["C"] == 1
    with pytest.raises(robp.RobpError, match="FeasibilityError"):
        robp.build_hitting_set(16, "0.9")


def test_richness_and_hitting():
    cube = [format(x, "06b") for x in range(64)]
    assert robp.check_rich(cube, "3/5")["outcome"] == "pass"
    verdict = robp.check_rich(["010011"], "3/5")
    assert verdict["outcome"] == "fail"
    assert verdict["counterexample"] is not None

    h = robp.build_hitting_set(10, "1/2", m=6)
    report = robp.hit_check(h, robp.compile_formula({**FORMULA, "n": 10, "c": "0101010101"}), "1/2")
    assert report["triggered"] and report["hit"]


def test_campaign():
    report = robp.campaign(
        {"n": 8, "epsilon": "9/10", "count": 6, "seed": 1, "source": "both", "set_params": {"m": 4}}
    )
    assert report["counts"]["generated"] == 6
    assert report["counts"]["missed"] == len(report["misses"])


def test_errors_surface_as_exceptions():
    with pytest.raises(robp.RobpError):
        robp.compile_formula({"n": 3, "Q": [], "R": [], "c": "000"})
    with pytest.raises(robp.RobpError):
        robp.evaluate(robp.random_robp(4), "101")
