from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import oracle_cmp_sqrt_sum, oracle_inertia
from projarea.errors import NonIntegerInput, NotApplicable
from projarea.exact import LESS, is_lorentzian
from projarea.membership import (
    STRATA,
    ZERO_REPRESENTATIVES,
    Constraint,
    Region,
    Status,
    classify_zero_orbit,
    evaluate_constraint,
    lorentz_matrix,
    sample_t2,
    t1_membership,
    t2_membership,
    z_obstruction,
)
from projarea.wedge import WedgeVector, act, symmetric_products
from strategies import group_elements, sparse_wedge_vectors, wedge_vectors


def vec(*xs):
    return WedgeVector.of(xs)


@pytest.mark.parametrize("last, status", [(3, Status.INTERIOR), (4, Status.BOUNDARY), (5, Status.OUTSIDE)])
def test_t2_examples(last, status):
    assert t2_membership(vec(1, 1, 1, 1, 1, last)).status == status


def test_t2_interior_example_against_surd_oracle():
    # a, b, c = 3, 1, 1: every rotation must be strictly positive
    a, b, c = symmetric_products(vec(1, 1, 1, 1, 1, 3))
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        assert oracle_cmp_sqrt_sum(x, y, z) == 1


def test_t1_examples():
    assert t1_membership(vec(1, 1, 1, 1, 1, 1)).status == Status.INTERIOR
    assert t1_membership(vec(1, 1, 1, 1, 1, Fraction(39, 10))).status == Status.OUTSIDE
    assert t1_membership(vec(0, 0, 0, 0, 0, 0)).status == Status.BOUNDARY


def test_t2_versus_t1_witness_pair():
    # The product triple of (1,1,1,1,1,3) is (3,1,1), so it fails 1 + 1 >= 3.
    p = vec(1, 1, 1, 1, 1, 3)
    assert t2_membership(p).inside and t1_membership(p).status == Status.OUTSIDE
    p = vec(1, 1, 1, 1, 1, 2)
    assert t2_membership(p).inside and t1_membership(p).status == Status.BOUNDARY
    q = vec(1, 1, 1, 1, 1, Fraction(39, 10))
    assert t2_membership(q).inside
    assert t1_membership(q).status == Status.OUTSIDE


def test_zero_entry_is_boundary():
    # A vanishing product forces the other two to agree, so a triangle is tight.
    v = t2_membership(vec(0, 1, 1, 1, 1, 1))
    assert v.status == Status.BOUNDARY
    assert v.constraint == Constraint("triangle", (1, 2, 3, 4))


@given(sparse_wedge_vectors)
def test_zero_entry_never_interior(p):
    if not all(p.support()):
        assert t2_membership(p).status != Status.INTERIOR


def test_negative_entry_is_outside():
    v = t2_membership(vec(1, 1, -1, 1, 1, 1))
    assert v.status == Status.OUTSIDE
    assert v.constraint == Constraint("entry", (1, 4))
    assert v.witness.startswith("violated:")


def test_witness_strings():
    assert t2_membership(vec(1, 1, 1, 1, 1, 4)).witness.startswith("tight: sqrt(")
    assert "sqrt" not in t1_membership(vec(1, 1, 1, 1, 1, 5)).witness
    assert t2_membership(vec(1, 1, 1, 1, 1, 1)).witness == ""


def test_lorentz_matrix_examples():
    assert lorentz_matrix(vec(1, 1, 1, 1, 1, 1)).entries == tuple(
        tuple(Fraction(int(i != j)) for j in range(4)) for i in range(4))
    assert all(x == 0 for row in lorentz_matrix(vec(0, 0, 0, 0, 0, 0)).entries for x in row)
    rows = [[0, 1, 2, 3], [1, 0, 4, 5], [2, 4, 0, 6], [3, 5, 6, 0]]
    assert lorentz_matrix(vec(1, 2, 3, 4, 5, 6)).entries == tuple(tuple(map(Fraction, r)) for r in rows)


def test_classify_examples():
    cls = classify_zero_orbit(vec(0, 1, 1, 1, 1, 0))
    assert cls.representative == vec(0, 1, 1, 1, 1, 0)
    assert act(cls.witness, cls.representative) == vec(0, 1, 1, 1, 1, 0)
    cls = classify_zero_orbit(vec(5, 0, 0, 0, 0, 0))
    assert cls.representative == vec(1, 0, 0, 0, 0, 0)
    assert cls.witness.lam == 5 and list(cls.witness.c) == [1] * 4
    assert act(cls.witness, cls.representative) == vec(5, 0, 0, 0, 0, 0)


@pytest.mark.parametrize("p", [vec(0, 2, 1, 1, 2, 0), vec(1, 1, 1, 1, 1, 1), vec(0, 0, 0, 0, 0, 0)])
def test_classify_not_applicable(p):
    with pytest.raises(NotApplicable):
        classify_zero_orbit(p)


def test_z_obstruction_examples():
    assert (1, 2, 3, 4) in z_obstruction(vec(1, 1, 1, 1, 1, 3))
    assert z_obstruction(vec(2, 2, 2, 2, 2, 8)) == []
    assert z_obstruction(vec(1, 1, 1, 1, 1, 1)) == []
    with pytest.raises(NonIntegerInput):
        z_obstruction(vec(1, 1, 1, 1, 1, Fraction(1, 2)))


def test_sampler_examples():
    assert all(t2_membership(p).status == Status.INTERIOR for p in sample_t2(1, 10, "interior"))
    for s in STRATA:
        assert sample_t2(1, 0, s) == []
    boundary = sample_t2(2, 5, "boundary")
    assert len(boundary) == 5
    assert all(t2_membership(p).status == Status.BOUNDARY for p in boundary)


@pytest.mark.parametrize("stratum", STRATA)
def test_sampler_is_deterministic_and_bounded(stratum):
    a = sample_t2(7, 20, stratum)
    assert a == sample_t2(7, 20, stratum)
    assert a != sample_t2(8, 20, stratum)
    assert all(0 <= x <= 10 for p in a for x in p)


def test_zero_entry_samples_have_zeros():
    for p in sample_t2(3, 30, "zero-entry"):
        assert not all(p.support())
        assert t2_membership(p).inside


@given(wedge_vectors)
def test_t2_agrees_with_lorentzian(p):
    assert t2_membership(p).inside == is_lorentzian(lorentz_matrix(p))


@given(sparse_wedge_vectors)
def test_t2_agrees_with_lorentzian_on_degenerate_vectors(p):
    assert t2_membership(p).inside == is_lorentzian(lorentz_matrix(p))


@given(sparse_wedge_vectors)
def test_lorentzian_against_inertia_oracle(p):
    plus, minus, _ = oracle_inertia(lorentz_matrix(p).entries)
    assert is_lorentzian(lorentz_matrix(p)) == (plus <= 1)


@given(st.one_of(wedge_vectors, sparse_wedge_vectors), group_elements)
def test_status_invariant_under_group_action(p, g):
    q = act(g, p)
    assert t2_membership(q).status == t2_membership(p).status
    assert t1_membership(q).status == t1_membership(p).status


@given(st.one_of(wedge_vectors, sparse_wedge_vectors), st.sampled_from(list(Region)))
def test_witness_re_evaluates(p, region):
    v = (t2_membership if region == Region.T2 else t1_membership)(p)
    if v.status == Status.OUTSIDE:
        assert evaluate_constraint(p, region, v.constraint) == LESS
    elif v.status == Status.BOUNDARY:
        assert evaluate_constraint(p, region, v.constraint) == 0
    else:
        assert v.constraint is None and all(p.support())


@given(wedge_vectors)
def test_interior_means_positive_and_strict(p):
    if t2_membership(p).status == Status.INTERIOR:
        assert all(x > 0 for x in p)


@given(sparse_wedge_vectors)
def test_t1_inside_implies_t2_inside(p):
    # a + b >= c gives (sqrt a + sqrt b)^2 >= c
    if t1_membership(p).inside:
        assert t2_membership(p).inside


@given(group_elements, st.sampled_from(ZERO_REPRESENTATIVES))
def test_classify_round_trip(g, rep):
    p = act(g, rep)
    cls = classify_zero_orbit(p)
    assert cls.representative == rep
    assert act(cls.witness, cls.representative) == p
