import pytest
from hypothesis import given, strategies as st

from eqhom.groups import coset_space, cyclic, regular_gset, symmetric
from eqhom.polyfun import simplex_monomial_ring
from eqhom.rings import (RingError, RingHom, augmentation, check_hom, crossed_product, direct_sum, dual_numbers,
                         from_table, gaussian, group_ring, groupoid_crossed, identity_hom,
                         inclusion_into_unitalization, matrix_ring, regular_bimodule, ring_Z, s_unital_probe,
                         tensor, truncated_poly, twisted_bimodule, unitalize)

from conftest import Z_over

S3, C2 = symmetric(3), cyclic(2)

RINGS = {
    "Z": ring_Z(),
    "Z[i]": gaussian(S3),
    "Z[C2]": group_ring(C2, "sign"),
    "Z[S3]": group_ring(S3, "conjugation"),
    "M2(Z)": matrix_ring(2, ring_Z()),
    "tZ[t]/t^3": truncated_poly(3),
    "Z[i]xC2": crossed_product(gaussian(C2)),
    "Z^(Δ2)": simplex_monomial_ring(2, 2),
    "Z+D": direct_sum(ring_Z(), dual_numbers()),
    "Z[i](x)Z[C2]": tensor(gaussian(C2), group_ring(C2, "sign")),
}
NAMES = sorted(RINGS)


def elements(R):
    return st.dictionaries(st.integers(0, R.rank - 1), st.integers(-4, 4), max_size=4)


@st.composite
def ring_and_triple(draw):
    R = RINGS[draw(st.sampled_from(NAMES))]
    return R, draw(elements(R)), draw(elements(R)), draw(elements(R))


def clean(v):
    return {k: c for k, c in v.items() if c}


def add(u, v):
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, 0) + c
    return clean(out)


@given(ring_and_triple())
def test_associative_and_distributive(data):
    R, x, y, z = data
    assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
    assert R.mul(x, add(y, z)) == add(R.mul(x, y), R.mul(x, z))
    if R.unit is not None:
        assert R.mul(R.unit, clean(x)) == clean(x) == R.mul(clean(x), R.unit)


@given(ring_and_triple())
def test_action_by_ring_automorphisms(data):
    R, x, y, _ = data
    if R.action is None:
        return
    for g in R.action.elements:
        assert R.act(g, R.mul(x, y)) == R.mul(R.act(g, x), R.act(g, y))


@pytest.mark.parametrize("name", NAMES)
def test_validate_and_identity(name):
    R = RINGS[name].validate()
    assert check_hom(identity_hom(R), ["multiplicative", "bijective"]).passed


def test_sabotaged_table_is_rejected():
    with pytest.raises(RingError):
        # x·x = y, y·x = x, everything else 0: (x·x)·x = x but x·(x·x) = 0
        from_table(["x", "y"], {(0, 0): {1: 1}, (1, 0): {0: 1}}, None)


def test_sabotaged_hom_is_caught():
    R = RINGS["Z[i]"]
    conj = RingHom(R, R, [{0: 1}, {1: -1}])
    assert check_hom(conj, ["multiplicative", "bijective", "unital"]).passed
    bad = RingHom(R, R, [{0: 1}, {1: 2}])
    v = check_hom(bad, ["multiplicative", "bijective"])
    assert not v.passed and v.first_failure()[0] == "multiplicative"


def test_constructions_have_expected_ranks():
    assert matrix_ring(3, gaussian()).rank == 18
    assert crossed_product(gaussian(S3)).rank == 12
    assert groupoid_crossed(Z_over(S3), coset_space(S3, [0, 1]).gset()).rank == 18
    assert tensor(gaussian(), group_ring(C2)).rank == 4
    assert unitalize(dual_numbers()).rank == 2


def test_groupoid_crossed_product_of_free_orbit_is_matrix_ring():
    R = groupoid_crossed(Z_over(C2), regular_gset(C2))
    assert R.rank == 4 and R.is_unital


def test_unitalization_maps():
    A = dual_numbers()
    At = unitalize(A)
    assert check_hom(inclusion_into_unitalization(A, At), ["multiplicative"]).passed
    assert check_hom(augmentation(At), ["multiplicative", "unital"]).passed


def test_twisted_bimodule_axioms():
    R = gaussian(C2)
    assert twisted_bimodule(R, 1).check() is None
    assert regular_bimodule(R).check() is None
    with pytest.raises(RingError):
        twisted_bimodule(ring_Z(), 0)


def test_s_unital_probe():
    D = dual_numbers()
    assert s_unital_probe(D, [{0: 1}]).witness is None
    F = simplex_monomial_ring(2, 2)
    res = s_unital_probe(F, [{0: 1}, {F.rank - 1: 1}])
    assert res.witness is not None
    with pytest.raises(RingError):
        s_unital_probe(D, [])


def test_bad_actions_are_rejected():
    with pytest.raises(RingError):
        group_ring(C2, "mystery")
    with pytest.raises(RingError):
        group_ring(C2, "conjugation", acting=S3)
