import pytest
from hypothesis import HealthCheck, settings

from eqhom.groups import cyclic, symmetric
from eqhom.rings import _ring, gaussian, group_ring, ring_Z, trivial_action

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# S3 elements in label order: e, (12), (01), (012), (021), (02)
C3_IN_S3 = frozenset({0, 3, 4})
C2_IN_S3 = frozenset({0, 1})


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def C2():
    return cyclic(2)


def Z_over(G):
    """Z with the trivial action of G."""
    return _ring(("1",), {(0, 0): {0: 1}}, {0: 1}, trivial_action(G, 1), name="Z")


@pytest.fixture(scope="session")
def Z():
    return ring_Z()


@pytest.fixture(scope="session")
def coefficient_rings(S3):
    """Small S3-rings: trivial, Galois-twisted and conjugation."""
    return {
        "Z": Z_over(S3),
        "Z[i]": gaussian(S3),
        "Z[S3]": group_ring(S3, "conjugation"),
    }
