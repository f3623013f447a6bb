import random

import pytest
from hypothesis import given, strategies as st

from eqhom.groups import cyclic
from eqhom.polyfun import (PolyError, PolyFun, act, check_extension, constant, coordinate, coordinates_in,
                           discrete_function_ring, extend, function_lattice, pullback, random_complex,
                           random_polyfun, random_subcomplex, s_unit_witness, self_proper, separating_function,
                           support)
from eqhom.simplicial import boundary_simplex, build_complex, simplex

seeds = st.integers(0, 10**6)


def instance(seed, max_vertices=8, max_dim=3, degree=3):
    rng = random.Random(seed)
    X = random_complex(rng, max_vertices, max_dim)
    Y = random_subcomplex(rng, X)
    return X, Y, random_polyfun(rng, Y, degree)


@given(seeds)
def test_extension_postconditions(seed):
    X, Y, phi = instance(seed)
    rep = extend(phi, X)
    chk = check_extension(phi, rep)
    assert chk.ok, chk.failures
    assert rep.psi.restrict_to(Y) == phi


@given(seeds)
def test_random_functions_are_compatible(seed):
    _, _, phi = instance(seed)
    assert phi.check_compatible() is None


@given(seeds)
def test_products_and_sums_stay_compatible(seed):
    rng = random.Random(seed)
    X = random_complex(rng, 6, 2)
    a, b = random_polyfun(rng, X, 2), random_polyfun(rng, X, 2)
    a, b = PolyFun(X, a.values, 4), PolyFun(X, b.values, 4)
    assert (a * b).check_compatible() is None
    assert (a + b) - b == a
    assert support(a * b) <= support(a) & support(b)


def test_barycentric_coordinates_sum_to_one():
    X = simplex(2)
    total = coordinate(X, 0) + coordinate(X, 1) + coordinate(X, 2)
    assert total == constant(X, 1)


def test_degree_bound_is_enforced():
    X = simplex(1)
    t = coordinate(X, 0, max_degree=1)
    with pytest.raises(PolyError):
        t * t
    with pytest.raises(PolyError):
        PolyFun(X, {(0, 2): {(): 1}})


def test_sabotaged_function_is_incompatible():
    X = simplex(1)
    f = coordinate(X, 0)
    broken = PolyFun(X, {**f.values, (0,): {(): 5}})
    assert broken.check_compatible() is not None


def test_linear_functions_are_determined_by_vertices():
    X = build_complex(5, [(0, 1, 2), (2, 3), (3, 4)])
    assert len(function_lattice(X, 1)) == X.nvertices
    assert len(function_lattice(simplex(2), 2)) == 6


def test_coordinates_recover_combinations():
    X = boundary_simplex(2)
    basis = function_lattice(X, 2)
    phi = basis[0].scale(3) - basis[-1]
    coeffs = coordinates_in(basis, phi)
    assert coeffs[0] == 3 and coeffs[-1] == -1


def test_s_unit_and_separation():
    X = boundary_simplex(2)
    elems = [coordinate(X, 0), coordinate(X, 1).scale(2)]
    mu = s_unit_witness(X, elems)
    assert all(mu * f == f for f in elems)
    for s in X.simplices:
        assert separating_function(X, s)(s)


def test_pullback_and_group_action():
    C2 = cyclic(2)
    X = build_complex(3, [(0, 1), (1, 2)], C2, [(0, 1, 2), (2, 1, 0)])
    phi = coordinate(X, 0)
    assert act(phi, 1) == coordinate(X, 2)
    assert act(act(phi, 1), 1) == phi
    # collapse the path onto its middle vertex's star
    Y = simplex(1)
    assert pullback(coordinate(Y, 0), X, (0, 1, 0)) == coordinate(X, 0) + coordinate(X, 2)


def test_discrete_rings_and_proper_structures():
    X = build_complex(3, [(0,), (1,), (2,)])
    R = discrete_function_ring(X)
    assert R.rank == 3 and R.is_unital
    P = self_proper(X)
    assert P.check() == {} and P.is_full()
    with pytest.raises(PolyError):
        discrete_function_ring(simplex(1))
