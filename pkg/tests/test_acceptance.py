"""Acceptance criteria, one test each.

Every test prints a single ``[acceptance]`` line with its verdict and wall time
against the limit, whether it passes or not.
"""

import random
import time
from contextlib import contextmanager
from pathlib import Path

from eqhom import homology as hom
from eqhom import induction as ind
from eqhom.cli import main
from eqhom.groups import cyclic, point_gset, regular_gset, symmetric
from eqhom.lincat import path_category, verify_cone_homotopy
from eqhom.oracles import oracle_homology, random_complex_matrices
from eqhom.polyfun import (check_extension, extend, random_complex, random_polyfun, random_subcomplex,
                           simplex_monomial_ring)
from eqhom.rings import crossed_product, direct_sum, dual_numbers, gaussian, group_ring, matrix_ring, ring_Z
from eqhom.simplicial import boundary_simplex, from_gset

from conftest import C2_IN_S3, C3_IN_S3, Z_over

G_ = hom.FGAbelianGroup
Z, ZERO = G_(1), G_()
SCENARIOS = Path(__file__).resolve().parents[1] / "scenarios"


@contextmanager
def criterion(capsys, number, text, limit):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[acceptance] {number:>2} {status}  {text}  ({elapsed:.2f}s, limit {limit}s)")


def test_01_two_pipelines_agree(capsys):
    with criterion(capsys, 1, "coend equals conjugacy-class hyperhomology sum", 60):
        C2 = cyclic(2)
        R = Z_over(C2)
        point = hom.verify_reilu(C2, from_gset(point_gset(C2)), R, 4)
        assert point.passed
        assert point.lhs == point.rhs == [G_(2), G_.make(0, [2, 2]), ZERO, G_.make(0, [2, 2]), ZERO]
        free = hom.verify_reilu(C2, from_gset(regular_gset(C2)), R, 2)
        assert free.passed and free.lhs == free.rhs == [Z, ZERO, ZERO]


def _green_ok(rep):
    flags = rep.verdict.results
    return (rep.passed and {"multiplicative", "bijective"} <= set(flags)
            and len(rep.diagram_checks) >= 2 and all(ok for _, ok, _ in rep.diagram_checks))


def test_02_green_imprimitivity(capsys):
    S3 = symmetric(3)
    with criterion(capsys, 2, "Green imprimitivity for (S3, C3, Z)", 5):
        assert _green_ok(ind.iso_green(S3, C3_IN_S3, Z_over(S3)))
    with criterion(capsys, 2, "Green imprimitivity for (S3, C2, Z[C2] with sign action)", 5):
        A = group_ring(cyclic(2), "sign", acting=S3, elements=C2_IN_S3)
        assert _green_ok(ind.iso_green(S3, C2_IN_S3, A))


def test_03_arrow_ring_across(capsys):
    with criterion(capsys, 3, "arrow ring of Z⋊G(S3/C2) is M_3(Z⋊C2)", 5):
        S3 = symmetric(3)
        rep = ind.iso_across(S3, C2_IN_S3, Z_over(S3))
        assert rep.passed and rep.hom.source.rank == rep.hom.target.rank == 18
        assert all(v is None for v in rep.verdict.results.values())
        assert [n for n, ok, _ in rep.diagram_checks if ok] == ["α∘ȷ = ι"]


def test_04_extension_suite(capsys):
    with criterion(capsys, 4, "200 extension instances satisfy the support theorem", 120):
        rng = random.Random(20240)
        for i in range(200):
            X = random_complex(rng, 8, 3)
            Y = random_subcomplex(rng, X)
            phi = random_polyfun(rng, Y, 3)
            rep = extend(phi, X)
            chk = check_extension(phi, rep)
            assert chk.ok, (i, chk.failures)
            assert rep.psi.restrict_to(Y) == phi


def test_05_excision_probes(capsys):
    with criterion(capsys, 5, "bar probes and the direct sum criterion", 60):
        C2 = cyclic(2)
        good = [matrix_ring(2, ring_Z()), group_ring(C2), simplex_monomial_ring(2, 3),
                crossed_product(gaussian(C2))]
        for R in good:
            assert hom.bar_tor_probe(R, "Z", 3).vanishes, R.name
        bad = hom.bar_tor_probe(dual_numbers(), "Z", 3)
        assert bad.first_nonzero() == (0, Z)
        small = [matrix_ring(2, ring_Z()), group_ring(C2), dual_numbers()]
        single = [hom.bar_tor_probe(R, "Z", 3).vanishes for R in small]
        for i, A in enumerate(small):
            for j, B in enumerate(small):
                assert hom.bar_tor_probe(direct_sum(A, B), "Z", 3).vanishes == (single[i] and single[j])


def test_06_yoneda(capsys):
    with criterion(capsys, 6, "coend on G/H equals HH of the crossed product, all H in C2 and S3", 60):
        for G in (cyclic(2), symmetric(3)):
            R = Z_over(G)
            for H in G.subgroups:
                y = hom.yoneda_check(G, H, R, 3)
                assert y.passed, (G.name, sorted(H))


def test_07_cone_homotopy(capsys):
    with criterion(capsys, 7, "cone homotopy on a -> b -> c", 10):
        C = path_category("abc", [("f", "a", "b"), ("g", "b", "c")])
        v = verify_cone_homotopy(C)
        assert v.passed and v.checked >= 2 * len(C.arrows)


def test_08_smith_oracle(capsys):
    with criterion(capsys, 8, "Smith homology matches the brute-force oracle on 500 complexes", 60):
        rng = random.Random(8)
        for _ in range(500):
            ranks, mats = random_complex_matrices(rng, 6, 5)
            assert hom.from_matrices(mats, ranks).homology_range() == oracle_homology(ranks, mats)
        assert hom.simplicial_chains(boundary_simplex(3)).homology_range() == [Z, ZERO, Z]


def test_09_conjugacy_split(capsys):
    with criterion(capsys, 9, "Hochschild complexes of Z[C2] and Z[S3] split by conjugacy class", 30):
        for G in (cyclic(2), symmetric(3)):
            R = group_ring(G)
            sp = hom.conjugacy_split(R, hom.hochschild_complex(R, 4))
            assert sp.passed and len(sp.classes) == len(G.conjugacy_classes)


def test_10_determinism(capsys, tmp_path):
    with criterion(capsys, 10, "reports are byte-identical across runs", 120):
        for name in ("catalog.json", "reilu.json"):
            a, b = tmp_path / f"a-{name}", tmp_path / f"b-{name}"
            assert main(["verify", str(SCENARIOS / name), "--report", str(a)]) == 0
            assert main(["verify", str(SCENARIOS / name), "--report", str(b), "--jobs", "2"]) == 0
            assert a.read_bytes() == b.read_bytes()
