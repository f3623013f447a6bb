import pytest
from hypothesis import given, strategies as st

from eqhom import homology as hom
from eqhom.groups import coset_space, cyclic, point_gset, regular_gset, symmetric
from eqhom.linalg import SparseMatrix
from eqhom.polyfun import simplex_monomial_ring
from eqhom.rings import (crossed_product, direct_sum, dual_numbers, gaussian, group_ring, matrix_ring, ring_Z,
                         truncated_poly, twisted_bimodule, unitalize)
from eqhom.simplicial import boundary_simplex, build_complex, from_gset, simplex

from conftest import Z_over

G_ = hom.FGAbelianGroup
Z, ZERO = G_(1), G_()


def Zmod(*ds):
    return G_.make(0, ds)


# values ------------------------------------------------------------------------------

abelian = st.builds(G_.make, st.integers(0, 3), st.lists(st.integers(2, 12), max_size=3))


@given(abelian)
def test_printed_form_round_trips(A):
    assert G_.parse(str(A)) == A
    assert G_.from_json(A.to_json()) == A


@given(abelian, abelian)
def test_sum_is_commutative_and_chain_normalised(A, B):
    S = A + B
    assert S == B + A
    assert all(S.torsion[i + 1] % S.torsion[i] == 0 for i in range(len(S.torsion) - 1))


def test_invariant_factor_chain():
    assert G_.make(0, [2, 3]) == Zmod(6)
    assert G_.make(0, [4, 6]).torsion == (2, 12)
    with pytest.raises(hom.HomologyError):
        G_(0, (2, 3))
    with pytest.raises(hom.HomologyError):
        G_.parse("Q^2")


def test_universal_coefficients():
    values = [Z, Zmod(2), ZERO]
    assert hom.Coefficients.parse("Z/2").apply(values) == [Zmod(2), Zmod(2), Zmod(2)]
    assert hom.Coefficients.parse("Z").apply(values) == values


# simplicial chains --------------------------------------------------------------------

def test_sphere_and_disk():
    assert hom.simplicial_chains(boundary_simplex(3)).validated().homology_range() == [Z, ZERO, Z]
    assert hom.simplicial_chains(simplex(3)).homology_range() == [Z, ZERO, ZERO, ZERO]


def test_projective_plane_torsion():
    # six-vertex triangulation of RP^2
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5),
              (2, 4, 5)]
    X = build_complex(6, facets)
    assert hom.simplicial_chains(X).validated().homology_range() == [Z, Zmod(2), ZERO]


def test_sabotaged_boundary_is_caught():
    C = hom.simplicial_chains(simplex(2))
    d2 = C.d[2].to_dense()
    d2[0][0] = -d2[0][0]
    C.d[2] = SparseMatrix.from_dense(d2)
    assert C.check_d2() == 2
    with pytest.raises(hom.HomologyError):
        C.validated()


def test_from_matrices_checks_shapes():
    with pytest.raises(Exception):
        hom.from_matrices([[[1, 1]]], [1, 3])


# Hochschild -----------------------------------------------------------------------------

def test_hochschild_of_integers():
    assert hom.hochschild_homology(ring_Z(), 3) == [Z, ZERO, ZERO, ZERO]


def test_hochschild_of_group_rings_matches_centralizer_homology():
    # HH_n(Z[G]) = sum over classes of H_n(C_G(g)); for C2 and C3 every centralizer is the group
    assert hom.hochschild_homology(group_ring(cyclic(2)), 3) == [G_(2), Zmod(2, 2), ZERO, Zmod(2, 2)]
    assert hom.hochschild_homology(group_ring(cyclic(3)), 2) == [G_(3), Zmod(3, 3, 3), ZERO]


def test_hochschild_morita_invariance():
    assert hom.hochschild_homology(matrix_ring(2, ring_Z()), 2) == [Z, ZERO, ZERO]


def test_hochschild_of_dual_numbers_via_unitalization():
    # HH(Z ⊕ A) = HH(Z) ⊕ HH(A) for the nonunital part A = tZ[t]/t^2
    A = dual_numbers()
    plain = hom.hochschild_homology(unitalize(A), 2)
    nonunital = hom.hochschild_homology(A, 2)
    assert plain[0] == nonunital[0] + Z
    assert plain[1:] == nonunital[1:]
    # the periodic resolution A <-0- A <-2t- A gives (Z^2, Z + Z/2, Z)
    assert plain == [G_(2), Z + Zmod(2), Z]


def test_twisted_coefficients_on_gaussian_integers():
    # complex conjugation twist: HH_0 = Z[i]/(a·m - m·conj(a)) = Z[i]/(2, 2i)
    R = gaussian(cyclic(2))
    vals = hom.hochschild_homology(R, 1, coeff=twisted_bimodule(R, 1))
    assert vals[0] == Zmod(2, 2)


@pytest.mark.parametrize("R", [ring_Z(), group_ring(cyclic(2)), dual_numbers()], ids=["Z", "Z[C2]", "D"])
def test_truncation_soundness(R):
    for N in range(1, 4):
        lower = hom.hochschild_complex(R, N).homology_range(N - 1)
        upper = hom.hochschild_complex(R, N + 1).homology_range(N - 1)
        assert lower == upper


def test_truncated_complexes_refuse_the_top_degree():
    C = hom.hochschild_complex(ring_Z(), 2)
    assert not C.complete and C.exact_through() == 1
    with pytest.raises(hom.HomologyError):
        C.homology(2)


@pytest.mark.parametrize("G", [cyclic(2), cyclic(3), symmetric(3)], ids=lambda G: G.name)
def test_conjugacy_split(G):
    R = group_ring(G)
    C = hom.hochschild_complex(R, 3)
    sp = hom.conjugacy_split(R, C)
    assert sp.passed
    assert len(sp.classes) == len(G.conjugacy_classes)
    assert sp.totals == [G.order ** (n + 1) for n in range(4)]


def test_conjugacy_split_needs_a_grading():
    with pytest.raises(hom.HomologyError):
        hom.conjugacy_split(ring_Z(), hom.hochschild_complex(ring_Z(), 1))


def test_cyclic_homology():
    assert [hom.cyclic_hc(ring_Z(), n) for n in range(4)] == [Z, ZERO, Z, ZERO]
    M2 = matrix_ring(2, ring_Z())
    assert hom.cyclic_hc(M2, 0) == Z and hom.cyclic_hc(M2, 1) == ZERO


def test_cyclic_nerve_of_free_orbit_is_morita_equivalent():
    # Z⋊G(G) for the regular G-set is M_|G|(Z): its cyclic nerve has the homology of Z
    C2 = cyclic(2)
    vals = hom.cyclic_nerve_complex(Z_over(C2), regular_gset(C2), 3).homology_range(2)
    assert vals == [Z, ZERO, ZERO]


# bar probes ---------------------------------------------------------------------------------

@pytest.mark.parametrize("R", [
    matrix_ring(2, ring_Z()),
    group_ring(cyclic(2)),
    crossed_product(gaussian(cyclic(2))),
    simplex_monomial_ring(2, 3),
], ids=["M2", "Z[C2]", "Z[i]xC2", "functions on simplex"])
def test_bar_probe_vanishes_for_unital_or_local_units(R):
    assert hom.bar_tor_probe(R, "Z", 3).vanishes


def test_bar_probe_detects_dual_numbers():
    probe = hom.bar_tor_probe(truncated_poly(2), "Z", 3)
    assert probe.first_nonzero() == (0, Z)
    assert hom.bar_tor_probe(truncated_poly(2), "Z/2", 1).values == [Zmod(2), Zmod(2)]


def test_barsum_iff():
    rings = [matrix_ring(2, ring_Z()), group_ring(cyclic(2)), dual_numbers()]
    single = [hom.bar_tor_probe(R, "Z", 2).vanishes for R in rings]
    for i, A in enumerate(rings):
        for j, B in enumerate(rings):
            assert hom.bar_tor_probe(direct_sum(A, B), "Z", 2).vanishes == (single[i] and single[j])


def test_bar_probe_degree_cap():
    with pytest.raises(hom.HomologyError):
        hom.bar_tor_probe(ring_Z(), "Z", 7)


# group hyperhomology, coend, Yoneda, two pipelines ---------------------------------------------

POINT = hom.ChainComplex({0: 1}, {}, {0: [0]})


@pytest.mark.parametrize("G, expected", [
    (cyclic(2), [Z, Zmod(2), ZERO, Zmod(2), ZERO]),
    (cyclic(3), [Z, Zmod(3), ZERO, Zmod(3), ZERO]),
    (symmetric(3), [Z, Zmod(2), ZERO, Zmod(6), ZERO]),
], ids=["C2", "C3", "S3"])
def test_group_homology(G, expected):
    M = hom.trivial_module(G, G.elements, POINT)
    assert hom.group_hyperhomology(M, 4) == expected


def test_reilu_point():
    C2 = cyclic(2)
    rep = hom.verify_reilu(C2, from_gset(point_gset(C2)), Z_over(C2), 4)
    assert rep.passed
    assert rep.lhs == rep.rhs == [G_(2), Zmod(2, 2), ZERO, Zmod(2, 2), ZERO]


def test_reilu_free_orbit():
    C2 = cyclic(2)
    rep = hom.verify_reilu(C2, from_gset(regular_gset(C2)), Z_over(C2), 2)
    assert rep.passed and rep.lhs == [Z, ZERO, ZERO]


def test_reilu_with_twisted_coefficients():
    C2 = cyclic(2)
    rep = hom.verify_reilu(C2, from_gset(point_gset(C2)), gaussian(C2), 2)
    assert rep.passed


def test_trivial_group_reduces_to_hochschild():
    e = cyclic(1)
    R = Z_over(e)
    rep = hom.verify_reilu(e, from_gset(point_gset(e)), R, 2)
    assert rep.passed and rep.lhs == hom.hochschild_homology(ring_Z(), 2)


def test_representatives_must_cover_classes():
    S3 = symmetric(3)
    with pytest.raises(hom.HomologyError):
        hom.verify_reilu(S3, from_gset(point_gset(S3)), Z_over(S3), 1, representatives=[0, 1])


def test_alpha_is_a_chain_map():
    C2 = cyclic(2)
    assert hom.ft_alpha_check(C2, Z_over(C2), 1, 2) is None
    assert hom.ft_alpha_check(C2, gaussian(C2), 1, 2) is None


@pytest.mark.parametrize("G", [cyclic(2), symmetric(3)], ids=lambda G: G.name)
def test_yoneda_every_subgroup(G):
    R = Z_over(G)
    for H in G.subgroups:
        y = hom.yoneda_check(G, H, R, 2)
        assert y.passed, (sorted(H), y)


def test_coend_on_a_transitive_set_is_hochschild_of_the_stabilizer_crossed_product():
    S3 = symmetric(3)
    H = frozenset({0, 3, 4})
    X = from_gset(coset_space(S3, H).gset())
    vals = hom.equivariant_coend(S3, X, Z_over(S3), 2).values
    assert vals == hom.hochschild_homology(group_ring(cyclic(3)), 2)


# L ladder -------------------------------------------------------------------------------------

def test_ladder():
    assert hom.L_ladder(ring_Z(), -1).rank == 1
    assert hom.L_ladder(ring_Z(), 0).rank == 0
    M2 = matrix_ring(2, ring_Z())
    assert hom.L_ladder(M2, 0).rank == 12
    assert hom.L_ladder(M2, 1).rank == 36
    with pytest.raises(hom.HomologyError):
        hom.L_ladder(M2, 2, cap=100)
