import random

import pytest
from hypothesis import given, strategies as st

from eqhom.groups import coset_space, symmetric
from eqhom.lincat import (CategoryError, arrow_ring, cone_mul, cone_normal_form, crossed_category, disjoint_union,
                          from_ring, from_spec, path_category, projection_p, random_category, verify_cone_homotopy)
from eqhom.rings import gaussian, matrix_ring, ring_Z

ABC = path_category("abc", [("f", "a", "b"), ("g", "b", "c")])


def test_path_category_arrow_ring_is_upper_triangular():
    R = arrow_ring(ABC)
    assert R.rank == 6 and R.is_unital
    # upper triangular 3x3 matrices: one arrow for each a <= b
    assert sorted(len(ABC.hom(a, b)) for a in range(3) for b in range(3)) == [0, 0, 0, 1, 1, 1, 1, 1, 1]


def test_cycles_are_rejected():
    with pytest.raises(CategoryError):
        path_category("ab", [("f", "a", "b"), ("g", "b", "a")])


def test_spec_round_trip_and_sabotage():
    spec = {"objects": ["x"], "arrows": [["1", "x", "x"], ["e", "x", "x"]],
            "comp": [["1", "1", "1", 1], ["1", "e", "e", 1], ["e", "1", "e", 1], ["e", "e", "e", 1]],
            "identities": {"x": "1"}}
    C = from_spec(spec)
    assert arrow_ring(C).rank == 2
    spec["comp"][3] = ["e", "e", "e", 2]  # Z[e]/(e^2 - 2e) is still a ring
    from_spec(spec)
    spec["comp"][1] = ["1", "e", "1", 1]  # 1∘e = 1 breaks the identity law
    with pytest.raises(CategoryError):
        from_spec(spec)


def test_one_object_categories_and_unions():
    C = from_ring(matrix_ring(2, ring_Z()))
    D = disjoint_union([C, ABC])
    assert len(D.objects) == 4 and arrow_ring(D).rank == 4 + 6


def test_crossed_category_of_cosets():
    S3 = symmetric(3)
    C = crossed_category(gaussian(S3), coset_space(S3, [0, 1]).gset())
    assert arrow_ring(C, validate=False).rank == 2 * 6 * 3


def test_cone_homotopy_on_path_category():
    v = verify_cone_homotopy(ABC)
    assert v.passed and v.checked > 0


def test_cone_homotopy_detects_a_perturbed_entry(monkeypatch):
    import eqhom.lincat as lc

    monkeypatch.setattr(lc, "_GAMMA", {1: -2, 3: 3})
    v = verify_cone_homotopy(ABC)
    assert not v.passed and v.failure is not None


@given(st.integers(0, 10**6))
def test_cone_homotopy_random_categories(seed):
    C = random_category(random.Random(seed))
    assert verify_cone_homotopy(C).passed


@given(st.integers(0, 10**6))
def test_rewriting_is_confluent(seed):
    rng = random.Random(seed)
    C = random_category(rng)
    word = tuple(rng.randrange(len(C.arrows)) for _ in range(rng.randint(1, 6)))
    base = cone_normal_form(C, word)
    for _ in range(4):
        assert cone_normal_form(C, word, rng) == base


@given(st.integers(0, 10**6))
def test_projection_is_multiplicative(seed):
    rng = random.Random(seed)
    C = random_category(rng)
    n = len(C.arrows)
    u = {tuple(rng.randrange(n) for _ in range(rng.randint(1, 3))): rng.randint(-2, 2)}
    v = {tuple(rng.randrange(n) for _ in range(rng.randint(1, 3))): rng.randint(-2, 2)}
    u, v = cone_normal_form(C, u), cone_normal_form(C, v)
    R = arrow_ring(C)
    assert projection_p(C, cone_mul(C, u, v)) == R.mul(projection_p(C, u), projection_p(C, v))
