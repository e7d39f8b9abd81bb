"""Hitting sets for width-3 read-once branching programs.

Programs and formulas are plain dicts in the JSON interchange formats used by
the ``robp`` command-line tool; probabilities come back as ``Fraction``.
"""

import json
from fractions import Fraction

from . import _robp
from ._robp import RobpError

__all__ = [
    "RobpError",
    "validate",
    "evaluate",
    "acceptance_probability",
    "brute_force_acceptance",
    "distributions",
    "normalize",
    "random_robp",
    "compile_formula",
    "formula_acceptance",
    "eval_formula",
    "random_formula",
    "irreducible_poly",
    "aghp_powering",
    "max_bias",
    "kwise_deviation",
    "hamming_ball",
    "richness_params",
    "check_rich",
    "build_hitting_set",
    "hit_check",
    "campaign",
]


def _dyadic(pair):
    numerator, exponent = pair
    return Fraction(int(numerator), 1 << exponent)


def _set_length(members):
    if not members:
        raise RobpError("empty sets need an explicit length")
    return len(members[0])


def validate(bp, width=3):
    """Return None for a valid program, otherwise the validation message."""
    return _robp.validate(json.dumps(bp), width)


def evaluate(bp, x):
    return _robp.eval(json.dumps(bp), x)


def acceptance_probability(bp):
    return _dyadic(_robp.acceptance_probability(json.dumps(bp)))


def brute_force_acceptance(bp):
    return _dyadic(_robp.brute_force_acceptance(json.dumps(bp)))


def distributions(bp):
    return [[_dyadic(p) for p in level] for level in _robp.distributions(json.dumps(bp))]


def normalize(bp, pad_width=False):
    return json.loads(_robp.normalize(json.dumps(bp), pad_width))


def random_robp(n, width=3, seed=0, oblivious=True):
    return json.loads(_robp.random_robp(n, width, seed, oblivious))


def compile_formula(formula):
    return json.loads(_robp.compile_formula(json.dumps(formula)))


def formula_acceptance(formula):
    return _dyadic(_robp.formula_acceptance(json.dumps(formula)))


def eval_formula(formula, x):
    return _robp.eval_formula(json.dumps(formula), x)


def random_formula(n, epsilon, seed=0):
    return json.loads(_robp.random_formula(n, str(epsilon), seed))


def irreducible_poly(m):
    """Coefficient bitmask of the smallest irreducible polynomial of degree m."""
    return _robp.irreducible_poly(m)


def aghp_powering(n, m):
    """All 2^(2m) samples, duplicates included, in (x, y) order of first occurrence."""
    return _robp.aghp_powering(n, m)


def max_bias(members):
    return Fraction(_robp.max_bias(list(members), _set_length(members)))


def kwise_deviation(members, k):
    return Fraction(_robp.kwise_deviation(list(members), _set_length(members), k))


def hamming_ball(center, radius):
    return _robp.hamming_ball(center, radius)


def richness_params(epsilon, n):
    return json.loads(_robp.richness_params(str(epsilon), n))


def check_rich(members, epsilon, weak=False, max_r=3, n=None):
    n = _set_length(members) if n is None else n
    return json.loads(_robp.check_rich(list(members), n, str(epsilon), weak, max_r))


def build_hitting_set(n, epsilon, m=None):
    """H for practical mode (explicit m) or literal mode (m=None)."""
    return _robp.build_hitting_set(n, str(epsilon), m)


def hit_check(members, bp, epsilon):
    return json.loads(_robp.hit_check(list(members), json.dumps(bp), str(epsilon)))


def campaign(config):
    return json.loads(_robp.campaign(json.dumps(config)))
