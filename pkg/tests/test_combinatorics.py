from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from jettower.combinatorics import (
    YoungShape,
    br_vanishing,
    character_identity_holds,
    coefficient_space_dim,
    enumerate_compositions,
    euler_char_mm0,
    leading_coefficient_check,
    leading_term_form,
    multi_indices,
    order_k_vanishing,
    rank_EGG,
    rank_EGG_bruteforce,
    schur_dim,
    schur_weights,
    tableau_count,
)


def test_multi_indices():
    assert multi_indices(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(multi_indices(3, 2)) == comb(4, 2)


def test_compositions_small():
    t = enumerate_compositions(1, 2, 2)
    # q' + 2 q'' = 2
    assert sorted(t.entries) == [(0, 1), (2, 0)]
    t.check()


def test_rank_values():
    assert rank_EGG(1, 1, 2, 3) == 6
    assert rank_EGG(1, 2, 2, 3) == 9
    assert rank_EGG(1, 2, 3, 3) == 19


@given(st.integers(1, 2), st.integers(1, 2), st.integers(0, 5), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_rank_matches_bruteforce(p, k, m, n):
    assert rank_EGG(p, k, m, n) == rank_EGG_bruteforce(p, k, m, n)


def test_rank_p1_k1_is_symmetric_power():
    for m in range(6):
        assert rank_EGG(1, 1, m, 3) == comb(m + 2, 2)


def test_shape_columns():
    assert YoungShape((3, 3, 0)).columns == (2, 2, 2)
    assert YoungShape((2, 1)).columns == (2, 1)
    with pytest.raises(ValueError):
        YoungShape((1, 2))


@pytest.mark.parametrize("lam", [(1, 1, 0), (2, 2, 0), (3, 1, 0), (2, 1, 1), (4, 2, 1)])
def test_weyl_equals_tableau_count(lam):
    assert schur_dim(lam, 3) == tableau_count(lam, 3)


def test_schur_dims():
    assert schur_dim((1, 1, 0), 3) == 3
    assert [schur_dim((m, m, 0), 3) for m in (1, 2, 3)] == [3, 6, 10]
    assert schur_dim((1, 1, 1, 1), 3) == 0


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_character_identity(m):
    assert character_identity_holds(m)
    assert sum(schur_weights((m, m, 0), 3).values()) == comb(m + 2, 2)


def test_vanishing_predicates():
    assert order_k_vanishing(2, 1, 3, 1)
    assert order_k_vanishing(1, 2, 3, 1)
    assert not order_k_vanishing(2, 2, 3, 1)
    for m in (1, 2, 3):
        assert br_vanishing((m, m, 0), 3, 4)
    assert not br_vanishing((1, 1, 1), 3, 4)
    assert coefficient_space_dim(3) == 34


def test_euler_char_small_values():
    # Lambda^2 Omega = T_X (x) K_X; on the quintic K is trivial, chi(T_X) = -100
    assert euler_char_mm0(5, 1) == -100
    # chi(O_X) = 1 - h^0(K_X) = 1 - h^0(O(d - 5))
    assert euler_char_mm0(5, 0) == 0
    assert euler_char_mm0(6, 0) == -4
    assert euler_char_mm0(7, 0) == 1 - 15
    for d in (5, 6):
        for m in range(4):
            assert euler_char_mm0(d, m, "schur") == euler_char_mm0(d, m, "sym")


def test_euler_char_symbolic_specialises():
    from jettower.charclass import chern_form_to_poly

    form = euler_char_mm0(None, 2)
    assert chern_form_to_poly(form)(7) == euler_char_mm0(7, 2)


def test_leading_coefficient_relation():
    # chi(m) has degree 5; its leading coefficient is minus the c_i(X) formula,
    # i.e. the formula evaluated on the Chern classes of the cotangent bundle
    for d in (6, 7, 10):
        rep = leading_coefficient_check(d)
        assert rep.degree == 5
        assert rep.leading == -leading_term_form(d)
    assert leading_term_form(6) == Fraction(13, 2)
