"""End-to-end acceptance checks, one test per criterion.

Each test prints a PASS/FAIL line; the full list is repeated in the
terminal summary.  Run directly (``python3 tests/test_acceptance.py``) for
just the lines.
"""
from fractions import Fraction

from acceptance_log import criterion

from jettower import checks
from jettower import reference as ref
from jettower.combinatorics import leading_coefficient_check
from jettower.core import DegreePoly
from jettower.positivity import effective_bound, threshold_search


@criterion(1, "level-1 relation reproduced term for term")
def test_criterion_01_level1_relation():
    res = checks.level1_relation()
    assert res.match, res.computed


@criterion(2, "printed degree-6 and degree-5 level-2 relations reduce to zero")
def test_criterion_02_level2_relations():
    for which in ("rel2", "rel3"):
        res = checks.level2_relation(which)
        assert res.match, (which, res.computed)


@criterion(3, "the four Chern classes of V_1 match the printed displays")
def test_criterion_03_v1_chern():
    res = checks.v1_chern("printed")
    assert res.match, res.computed
    assert len(res.computed["c4"].replace(" - ", " + ").split(" + ")) == 14


@criterion(4, "symbolic Morse form, for exactly one u-ordering, named in the report")
def test_criterion_04_morse_form():
    res = checks.morse()
    assert res.match, res.computed
    assert res.computed["matching_orderings"] == 1
    assert res.tags["ordering_used"] == "standard"
    assert res.computed["chern_form"]["h*c1^2"] == "0" and res.computed["chern_form"]["h*c2"] == "0"


@criterion(5, "degree quartic and threshold 19 with exact signs at 18 and 19")
def test_criterion_05_threshold():
    res = checks.threshold()
    assert res.match, res.computed
    poly = DegreePoly.from_list(ref.MORSE_POLY)
    assert threshold_search(poly) == 19
    assert poly(18) < 0 < poly(19)


@criterion(6, "alpha coefficients, effective bound 93 and exact alpha signs at 92 and 93")
def test_criterion_06_alpha_and_bound():
    res = checks.alpha()
    assert res.match, res.computed
    b = checks.bound()
    assert b.match, b.computed
    alpha = checks.printed_alpha()
    assert effective_bound(alpha) == 93
    assert alpha(93, Fraction(84, 88)) > 0
    assert alpha(92, Fraction(84, 87)) < 0


@criterion(7, "Schubert oracles on the fibers and on X_1, X_2 for d in 3, 5, 7")
def test_criterion_07_schubert():
    res = checks.schubert_anchors((3, 5, 7))
    assert res.match, res.computed


@criterion(8, "Whitney identities and free ranks 3 and 6")
def test_criterion_08_whitney():
    for d in (None, 6):
        res = checks.whitney(d)
        assert res.match, res.computed


@criterion(9, "rank of the Green-Griffiths bundle equals brute force on the grid")
def test_criterion_09_ranks():
    res = checks.ranks_grid(2, 2, 4, 3)
    assert res.match
    assert len(res.computed) == 2 * 2 * 5 * 3


@criterion(10, "vanishing predicates")
def test_criterion_10_vanishing():
    res = checks.vanishing_cases()
    assert res.match, res.computed


@criterion(11, "Euler characteristic: degree 5, leading coefficient formula, 13/2 at d=6, routes agree")
def test_criterion_11_euler_characteristic():
    res = checks.euler_char((6, 7, 10), 4)
    for key in res.computed:
        assert res.computed[key]["degree"] == 5
        assert res.computed[key]["routes agree"]
    lead6 = leading_coefficient_check(6).leading
    assert lead6 == Fraction(13, 2), f"leading coefficient at d=6 is {lead6}, not 13/2"
    assert res.match, res.computed


@criterion(12, "tangency of every coefficient field at d=3, 4; corrupted field rejected")
def test_criterion_12_tangency():
    res = checks.tangency((3, 4))
    assert res.match, res.computed


@criterion(13, "Cramer pole audit at d=3: denominator W_12, allowed profiles, order 7")
def test_criterion_13_pole_audit():
    res = checks.pole_audit(3)
    assert res.match, res.computed


@criterion(14, "nef recursion p=2, k=2: weights (5, 1) and bound 24")
def test_criterion_14_nef():
    res = checks.nef_weights(2, 2, "B")
    assert res.match, res.computed
    assert res.computed["ell"] == 2 * 2 * (2 * 2 + 2) ** (2 - 1)


@criterion(15, "tower dimensions 9, 6, 5 and the p=1 specialization")
def test_criterion_15_dims():
    res = checks.dims(3, 3, 4)
    assert res.match, res.computed


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
