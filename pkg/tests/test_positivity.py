from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jettower import reference as ref
from jettower.core import DegreePoly
from jettower.positivity import (
    WeightTuple,
    alpha_feasible,
    delta_lower_bound,
    effective_bound,
    is_effective_weight,
    morse_poly_by_interpolation,
    morse_quantity,
    nef_recursion,
    threshold_search,
    weight_to_b,
)

PRINTED = DegreePoly.from_list(ref.MORSE_POLY)
PRINTED_ALPHA = DegreePoly.from_list(ref.MORSE_POLY, ref.ALPHA_DELTA)
F = WeightTuple((5, 1), 24)
G = WeightTuple((), 24)


def test_weight_to_b_and_effectivity():
    assert weight_to_b((5, 1)) == (5, 6)
    assert is_effective_weight((5, 1))
    assert not is_effective_weight((-1, 0))
    assert is_effective_weight((2, -1))


weights = st.lists(st.integers(-6, 6), min_size=0, max_size=3)


@given(weights, weights)
def test_b_is_additive(a, b):
    s = WeightTuple(tuple(a)) + WeightTuple(tuple(b))
    n = len(s.a)
    pad = lambda v: tuple(v) + (0,) * (n - len(v))
    assert weight_to_b(s) == tuple(x + y for x, y in zip(weight_to_b(pad(a)), weight_to_b(pad(b))))


def test_nef_recursion():
    nw = nef_recursion(2, 2)
    assert nw.weights.a == (5, 1) and nw.ell == 24
    assert nef_recursion(1, 2).weights.a == (2, 1)
    assert nef_recursion(2, 2, "A").weights.h_twist == 24
    assert nef_recursion(2, 1, "A").weights.h_twist == 4
    assert nef_recursion(2, 3).weights.a == (30, 5, 1)
    assert nef_recursion(2, 3).ell == 4 * 36


def test_capped_expansion_reproduces_printed_form():
    rep = morse_quantity(F, G, expansion="capped")
    assert rep.chern_form == ref.MORSE_FORM
    assert rep.degree_poly == PRINTED
    assert rep.ordering_used == "standard"


def test_reversed_ordering_does_not_match():
    rep = morse_quantity(F, G, ordering="reversed", expansion="capped")
    assert rep.degree_poly != PRINTED


def test_exact_expansion_differs_from_printed():
    rep = morse_quantity(F, G, expansion="exact")
    assert rep.degree_poly == DegreePoly.from_list([0, -30939856, -53461984, -10213360, 401184])
    assert threshold_search(rep.degree_poly) == 30


@pytest.mark.parametrize("expansion", ["capped", "exact"])
def test_numeric_agrees_with_symbolic(expansion):
    sym = morse_quantity(F, G, expansion=expansion).degree_poly
    for d in (6, 19, 40):
        assert morse_quantity(F, G, d, expansion=expansion).value == sym(d)


def test_interpolation_agrees_with_symbolic():
    poly = morse_poly_by_interpolation(F, G, samples=range(20, 31), degree_bound=10, expansion="capped")
    assert poly == PRINTED


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(6, 60))
@settings(max_examples=15, deadline=None)
def test_linear_in_G(s, t, d):
    def q(g):
        return morse_quantity(F, WeightTuple((), g), d, expansion="exact").value

    # F^8 - 8 F^7 G is affine in G
    assert q(s + t) - q(t) == q(s) - q(0)


def test_symbolic_delta_is_linear():
    alpha = morse_quantity(F, WeightTuple((), 24, 0, True), expansion="capped").degree_poly
    assert alpha == PRINTED_ALPHA
    assert alpha.is_linear_in_delta()
    val = morse_quantity(F, WeightTuple((), 24, 3), 50, expansion="capped").degree_poly(50)
    assert val == alpha(50, 3)


def test_threshold_and_signs():
    assert threshold_search(PRINTED) == 19
    assert PRINTED(18) < 0 < PRINTED(19)


def test_effective_bound():
    assert delta_lower_bound(93) == Fraction(84, 88)
    assert PRINTED_ALPHA(93, Fraction(84, 88)) > 0
    assert PRINTED_ALPHA(92, Fraction(84, 87)) < 0
    assert not alpha_feasible(PRINTED_ALPHA, 92)
    assert alpha_feasible(PRINTED_ALPHA, 93)
    assert effective_bound(PRINTED_ALPHA) == 93


def test_threshold_rejects_bad_input():
    with pytest.raises(ValueError):
        threshold_search(-PRINTED)
    with pytest.raises(ValueError):
        morse_quantity(F, G, ordering="sideways")
