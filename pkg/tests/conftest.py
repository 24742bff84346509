import pytest

from liebranch.matrix_rep import construct_rep, invariant_antisymmetric_form
from liebranch.projection import derive_projection, reference_projection
from liebranch.rootsystem import build_root_system


@pytest.fixture(scope="session")
def e7():
    return build_root_system("E7")


@pytest.fixture(scope="session")
def c28():
    return build_root_system("C28")


@pytest.fixture(scope="session")
def rep56(e7):
    return construct_rep(e7, (0, 0, 0, 0, 0, 0, 1))


@pytest.fixture(scope="session")
def form56(rep56):
    return invariant_antisymmetric_form(rep56)


@pytest.fixture(scope="session")
def derived_proj():
    return derive_projection()


@pytest.fixture(scope="session")
def reference_proj():
    return reference_projection()
