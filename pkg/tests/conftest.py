import pytest
from hypothesis import HealthCheck, settings

from fstopo.algebra import GradeLattice, Universe
from fstopo.auditor import run_audit
from fstopo.corpus import SetPool
from fstopo.softsets import ParameterSet

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def desk_pool() -> SetPool:
    """The 81-set pool: |U| = 2, |A| = 2, lattice {0, 1/2, 1}."""
    return SetPool(
        Universe.of("x", "y"),
        ParameterSet.of("e1", "e2"),
        GradeLattice.close([0, "1/2", 1]),
    )


@pytest.fixture(scope="session")
def full_audit():
    """One unbudgeted audit shared by the acceptance tests.

    Runs the whole enumerated corpus plus the random and named cases,
    so statuses here are the definitive ones.
    """
    return run_audit(workers=2)
