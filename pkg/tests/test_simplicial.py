import pytest

from eqhom.groups import coset_space, cyclic, point_gset, regular_gset, symmetric
from eqhom.homology import simplicial_chains
from eqhom.simplicial import (ComplexError, boundary_simplex, build_complex, family_check, fixed_points,
                              from_gset, induce_space, is_family, simplex, subcomplex_ops, subdivide)

S3 = symmetric(3)


def test_closure_and_faces():
    X = simplex(2)
    assert len(X.simplices) == 7 and X.dim == 2
    assert boundary_simplex(2).facets == [(0, 1), (0, 2), (1, 2)]


def test_bad_complexes_are_rejected():
    with pytest.raises(ComplexError):
        build_complex(2, [(0, 2)])
    with pytest.raises(ComplexError):
        build_complex(2, [(0, 0)])
    with pytest.raises(ComplexError):
        # the swap stabilizes the edge without fixing it
        build_complex(2, [(0, 1)], cyclic(2), [(0, 1), (1, 0)])


def test_subdivision_makes_the_swap_admissible():
    X = build_complex(2, [(0, 1)], cyclic(2), [(0, 1), (1, 0)], require_admissible=False)
    Y = subdivide(X)
    assert Y.check_admissible() is None
    assert simplicial_chains(Y).homology_range() == simplicial_chains(X).homology_range()


def test_star_and_link():
    X = simplex(2)
    data = subcomplex_ops(X, [(0,)])
    assert data.link == frozenset({(1,), (2,), (1, 2)})
    assert (0, 1, 2) in data.star and (1, 2) not in data.star


def test_fixed_points_and_orbits():
    X = from_gset(coset_space(S3, [0, 1]).gset())
    assert fixed_points(X, [0, 1]).nvertices == 1
    assert fixed_points(X, [0, 3, 4]).nvertices == 0
    assert fixed_points(from_gset(point_gset(S3)), S3.elements).nvertices == 1


def test_induced_space():
    X = build_complex(2, [(0, 1)], S3, [(0, 1)] * 6)
    Y = induce_space(S3, [0, 3, 4], X)
    assert Y.nvertices == 4 and len(Y.facets) == 2


def test_families():
    assert is_family(S3, [frozenset({0})])
    assert not is_family(S3, [frozenset({0, 1})])
    X = from_gset(regular_gset(S3))
    assert family_check(X, [frozenset({0})])
    with pytest.raises(ComplexError):
        family_check(X, [frozenset({0, 1})])
