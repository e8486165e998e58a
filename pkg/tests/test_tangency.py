from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jettower.tangency import (
    JetPoly,
    VectorFieldSym,
    affine_indices,
    apply_field,
    build_jet_ideal,
    check_tangency,
    coefficient_field,
    coefficient_fields,
    corrupted_field,
    cramer_pole_audit,
    explicit_A_field,
    in_sigma,
    pattern_terms,
    profile_allowed,
    solve_A_field,
    wedge_minors,
    xv,
    yv,
)


def test_affine_indices_count():
    # monomials of degree <= d in z1..z4 minus the excluded leading one
    from math import comb

    assert len(affine_indices(3)) == comb(7, 4) - 1


def test_ideal_has_six_generators():
    ideal = build_jet_ideal(3)
    assert ideal.labels == ("P", "D1", "D2", "D11", "D12", "D22")
    with pytest.raises(ValueError):
        build_jet_ideal(2)


def test_pattern_terms_binomial():
    terms = pattern_terms((2, 1, 0, 0))
    assert len(terms) == 6
    assert sum(c for c, _ in terms) == 0


def test_field_counts():
    fields = coefficient_fields(3)
    assert len(fields) == 19
    v210 = coefficient_field((2, 1, 0, 0), (2, 1, 0, 0))
    v111 = coefficient_field((1, 1, 1, 0), (1, 1, 1, 0))
    assert len(v210.components) == 6
    assert len(v111.components) == 8


@pytest.mark.parametrize("d", [3, 4])
def test_all_fields_tangent(d):
    ideal = build_jet_ideal(d)
    for f in coefficient_fields(d):
        rep = check_tangency(f, ideal)
        assert rep.ok, f.label


def test_corrupted_field_detected():
    ideal = build_jet_ideal(3)
    rep = check_tangency(corrupted_field(3), ideal)
    assert not rep.ok


polys = st.lists(
    st.tuples(st.sampled_from(["z1", "z2", "x1_1", "y11_2", "a0120", "a1000"]), st.integers(0, 2), st.integers(-3, 3)),
    min_size=1,
    max_size=4,
)


def build(spec):
    out = JetPoly()
    for v, e, c in spec:
        out = out + JetPoly.monomial({v: e} if e else {}, c)
    return out


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_field_action_is_a_derivation(f_spec, g_spec):
    V = VectorFieldSym(
        {
            "z1": JetPoly.var("z2") * 2,
            "x1_1": JetPoly.var("a0120") - 1,
            "a0120": JetPoly.var("z1") ** 2,
            "y11_2": JetPoly.const(Fraction(1, 3)),
        }
    )
    f, g = build(f_spec), build(g_spec)
    assert apply_field(V, f * g) == apply_field(V, f) * g + f * apply_field(V, g)


matrices = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4)


@given(matrices)
@settings(max_examples=10, deadline=None)
def test_solved_A_field_is_tangent(A):
    ideal = build_jet_ideal(3)
    res = solve_A_field(A, 3)
    assert res.feasible
    assert check_tangency(res.field, ideal).ok


@pytest.mark.parametrize("d", [3, 4, 5])
def test_explicit_A_field(d):
    A = [[1, 2, 0, -1], [0, 1, 3, 0], [2, 0, 0, 1], [-1, 1, 1, 2]]
    assert check_tangency(explicit_A_field(A, d), build_jet_ideal(d)).ok


def test_sigma_membership():
    # every first and second derivative a multiple of one vector v
    v = (1, -2, 3, 5)
    pt = {}
    for j in range(1, 5):
        pt[xv(1, j)] = v[j - 1]
        pt[xv(2, j)] = 2 * v[j - 1]
        for (i, k), s in zip(((1, 1), (1, 2), (2, 2)), (3, -1, 0)):
            pt[yv(i, k, j)] = s * v[j - 1]
    assert in_sigma(pt)
    pt[yv(1, 2, 1)] += 1
    assert not in_sigma(pt)
    assert wedge_minors((1, 0), (0, 1)) == [1]


def test_pole_audit():
    assert profile_allowed(2, 1, 1) and profile_allowed(1, 3, 0)
    assert not profile_allowed(2, 3, 0)
    for i in (1, 2):
        for l in (1, 2):
            rep = cramer_pole_audit(3, i, l)
            assert rep.ok and rep.denominator_is_W12
            assert rep.max_order == 7
