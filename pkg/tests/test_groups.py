import random

import pytest
from hypothesis import given, strategies as st

from eqhom.groups import (GroupError, alternative_section, coset_space, cyclic, disjoint_union, double_cosets,
                          fixed_points_pushout_check, make_group, point_gset, pushout, random_equivariant_map,
                          random_gset, regular_gset, symmetric, transport_groupoid)

from conftest import C2_IN_S3, C3_IN_S3

GROUPS = [cyclic(1), cyclic(2), cyclic(3), cyclic(4), symmetric(3)]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_group_axioms(G):
    G.validate()
    e = G.identity
    for g in G.elements:
        assert G.mul(g, G.inv(g)) == e
        assert G.element_order(g) >= 1


def test_symmetric_three_structure(S3):
    assert S3.order == 6
    assert len(S3.subgroups) == 6
    assert sorted(len(c) for c in S3.conjugacy_classes) == [1, 2, 3]
    assert S3.is_subgroup(C3_IN_S3) and S3.is_subgroup(C2_IN_S3)
    assert S3.centralizer(3) == C3_IN_S3


def test_bad_specs_are_rejected(S3):
    with pytest.raises(GroupError):
        make_group("dihedral:4")
    with pytest.raises(GroupError):
        S3.check_subgroup([0, 1, 3])


@pytest.mark.parametrize("H", [C3_IN_S3, C2_IN_S3, frozenset({0})])
def test_coset_decomposition(S3, H):
    cs = coset_space(S3, H)
    assert cs.size * len(H) == 6
    assert cs.section[0] == S3.identity
    for g in S3.elements:
        x, h = cs.decompose(g)
        assert h in H and S3.mul(cs.section[x], h) == g


def test_alternative_section_is_a_different_choice(S3):
    cs = coset_space(S3, C2_IN_S3)
    alt = alternative_section(cs)
    assert cs.section == (0, 2, 4)
    assert alt.section == (0, 3, 5)
    assert alt.gset().act == cs.gset().act


def test_double_cosets_partition(S3):
    ds = double_cosets(S3, C2_IN_S3, C2_IN_S3)
    seen = sorted(g for d in ds for g in d.elements)
    assert seen == list(S3.elements)
    assert len(ds) == 2


def test_transport_groupoid_hom_sets(S3):
    S = coset_space(S3, C2_IN_S3).gset()
    T = transport_groupoid(S3, S)
    for s in range(S.size):
        assert len(T.hom(s, s)) == 2
        for t in range(S.size):
            assert all(S.act[g][s] == t for g in T.hom(s, t))


@given(st.integers(0, 10**6))
def test_pushout_fixed_points(seed):
    assert fixed_points_pushout_check(symmetric(3), random.Random(seed)) is None


@given(st.integers(0, 10**6))
def test_random_equivariant_maps_commute(seed):
    rng = random.Random(seed)
    G = symmetric(3)
    A, X = random_gset(G, rng), random_gset(G, rng)
    f = random_equivariant_map(A, X, rng)
    if f is None:
        return
    for g in G.elements:
        assert all(X.act[g][f[a]] == f[A.act[g][a]] for a in range(A.size))


def test_pushout_rejects_non_injective_leg(C2):
    A = regular_gset(C2)
    P = point_gset(C2)
    with pytest.raises(GroupError):
        pushout(A, P, P, (0, 0), (0, 0))


def test_pushout_glues_orbits(C2):
    P = point_gset(C2)
    B = disjoint_union([P, regular_gset(C2)])
    Y, jB, jX = pushout(P, B, P, (0,), (0,))
    assert Y.size == 3 and jB[0] == jX[0] == 0
    assert Y.fixed([0, 1]) == (0,)
