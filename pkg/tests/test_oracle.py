import random

from hypothesis import given, strategies as st

from eqhom.homology import from_matrices, simplicial_chains
from eqhom.oracles import determinantal_factors, oracle_homology, random_complex_matrices, rank_mod_p, rational_rank
from eqhom.polyfun import random_complex

seeds = st.integers(0, 10**6)


def _mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@given(seeds)
def test_generator_gives_complexes(seed):
    ranks, mats = random_complex_matrices(random.Random(seed))
    for m1, m2 in zip(mats, mats[1:]):
        assert not any(any(row) for row in _mul(m1, m2))
    assert all(abs(x) <= 5 for m in mats for row in m for x in row)


@given(seeds)
def test_smith_homology_matches_oracle(seed):
    ranks, mats = random_complex_matrices(random.Random(seed))
    assert from_matrices(mats, ranks).homology_range() == oracle_homology(ranks, mats)


@given(seeds)
def test_simplicial_homology_matches_oracle_and_euler(seed):
    X = random_complex(random.Random(seed), 6, 2)
    C = simplicial_chains(X)
    ranks = [C.rank(n) for n in range(C.hi + 1)]
    mats = [C.boundary(n).to_dense() for n in range(1, C.hi + 1)]
    H = C.homology_range()
    assert H == oracle_homology(ranks, mats)
    assert sum((-1) ** n * h.rank for n, h in enumerate(H)) == sum((-1) ** n * r for n, r in enumerate(ranks))


def test_oracle_pieces():
    a = [[2, 0], [0, 3]]
    assert determinantal_factors(a) == [1, 6]
    assert rational_rank(a) == 2
    assert rank_mod_p(a, 2) == 1 and rank_mod_p(a, 3) == 1 and rank_mod_p(a, 5) == 2
