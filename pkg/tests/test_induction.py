import pytest

from eqhom import induction as ind
from eqhom.groups import cyclic, point_gset, regular_gset, symmetric
from eqhom.rings import RingHom, check_hom, gaussian, group_ring
from eqhom.simplicial import build_complex

from conftest import C2_IN_S3, C3_IN_S3, Z_over

S3 = symmetric(3)
SUBGROUPS = [C3_IN_S3, C2_IN_S3, frozenset({0}), frozenset(S3.elements)]
SUB_IDS = ["C3", "C2", "1", "S3"]


@pytest.fixture(scope="module")
def rings():
    return {"Z": Z_over(S3), "Z[i]": gaussian(S3), "Z[S3]": group_ring(S3, "conjugation")}


@pytest.mark.parametrize("H", SUBGROUPS, ids=SUB_IDS)
@pytest.mark.parametrize("name", ["Z", "Z[i]", "Z[S3]"])
def test_green(rings, H, name):
    rep = ind.iso_green(S3, H, rings[name])
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("H", SUBGROUPS, ids=SUB_IDS)
@pytest.mark.parametrize("name", ["Z", "Z[i]"])
def test_across_indtriv_indcomp(rings, H, name):
    for build in (ind.iso_across, ind.iso_indtriv, ind.iso_indcomp_i):
        rep = build(S3, H, rings[name])
        assert rep.passed, rep.summary()


def test_green_with_another_section(rings):
    rep = ind.iso_green(S3, C2_IN_S3, rings["Z[i]"], section=(0, 3, 5))
    assert rep.passed


def test_green_with_a_twisted_subgroup_ring():
    A = group_ring(cyclic(2), "sign", acting=S3, elements=C2_IN_S3)
    assert ind.iso_green(S3, C2_IN_S3, A).passed


def test_across_rank():
    rep = ind.iso_across(S3, C2_IN_S3, Z_over(S3))
    assert rep.hom.source.rank == 18
    assert all(ok for _, ok, _ in rep.diagram_checks)


def test_sabotaged_green_map_fails(rings):
    rep = ind.iso_green(S3, C3_IN_S3, rings["Z"])
    f = rep.hom
    images = list(f.images)
    images[1], images[2] = images[2], images[1]
    v = check_hom(RingHom(f.source, f.target, images), ["multiplicative"])
    assert not v.passed


def test_induced_ring_relations(rings):
    for H in SUBGROUPS:
        I = ind.induce_ring(S3, H, rings["Z[i]"])
        assert not I.check_relations()
        assert I.ring.rank == 2 * 6 // len(H)


def test_function_model_round_trip(rings):
    I = ind.induce_ring(S3, C2_IN_S3, rings["Z[i]"])
    for i in range(I.ring.rank):
        assert I.from_function(I.as_function({i: 1})) == {i: 1}


def test_induction_needs_the_subgroup_to_act():
    A = gaussian(cyclic(2))
    with pytest.raises(ind.InductionError):
        ind.induce_ring(S3, C2_IN_S3, A)


def test_mxg():
    C2 = cyclic(2)
    assert ind.iso_mxg(C2, regular_gset(C2), Z_over(C2)).passed
    assert ind.iso_mxg(S3, point_gset(S3), gaussian(S3)).passed


def test_indcomp_ii(rings):
    A, proper = ind.tensor_proper(S3, C2_IN_S3, rings["Z[i]"])
    assert proper.check() == {}
    assert ind.iso_indcomp_ii(S3, C2_IN_S3, A, proper).passed


def test_indx_discrete_and_polynomial():
    X = build_complex(2, [(0,), (1,)], S3, [(0, 1), (1, 0), (1, 0), (0, 1), (0, 1), (1, 0)])
    assert ind.iso_indx(S3, C2_IN_S3, X).passed
    E = build_complex(2, [(0, 1)], S3, [(0, 1)] * 6)
    assert ind.indx_functions(S3, C3_IN_S3, E, degree=1).passed
    with pytest.raises(ind.InductionError):
        ind.iso_indx(S3, C3_IN_S3, E)


@pytest.mark.parametrize("H", [C2_IN_S3, C3_IN_S3, frozenset({0})], ids=["C2", "C3", "1"])
@pytest.mark.parametrize("K", [C2_IN_S3, frozenset({0, 2}), frozenset({0})], ids=["C2", "C2'", "1"])
def test_res_ind_decomposition(rings, H, K):
    dec = ind.decompose_res_ind(S3, H, K, rings["Z[i]"])
    assert dec.passed
    total = sum(s.ring.rank for s in dec.summands)
    assert total == 2 * 6 // len(K)


def test_indxtheta(rings):
    assert ind.iso_indxtheta(S3, C2_IN_S3, frozenset({0, 2}), rings["Z[i]"], 0).passed


def test_named_lookup(rings):
    assert "green" in ind.ISOMORPHISMS
    rep = ind.named_isomorphism("across", G=S3, H=C3_IN_S3, A=rings["Z"])
    assert rep.passed
    with pytest.raises(ind.InductionError):
        ind.named_isomorphism("nope")
