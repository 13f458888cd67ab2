import pytest

from antikekule.generators import FamilySpec, corpus, generate


@pytest.fixture(scope="session")
def small_corpus():
    """Named families and a few seeded random cubic graphs up to n = 16."""
    return corpus(16, 2)


@pytest.fixture(scope="session")
def k4():
    return generate(FamilySpec("k4"))


@pytest.fixture(scope="session")
def k33():
    return generate(FamilySpec("k33"))


@pytest.fixture(scope="session")
def cube():
    return generate(FamilySpec("cube"))


@pytest.fixture(scope="session")
def petersen():
    return generate(FamilySpec("petersen"))


@pytest.fixture(scope="session")
def no_pm_gadget():
    return generate(FamilySpec("no_pm_gadget"))


@pytest.fixture(scope="session")
def bridged_gadget():
    return generate(FamilySpec("bridged_double_gadget"))
