import pytest

from pyschouten.dsl import parse_expression
from pyschouten.reference import reference_functionals


@pytest.fixture(scope="session")
def triple():
    """The functionals F, G, H of the worked example."""
    return reference_functionals()


@pytest.fixture
def E():
    """Shorthand for parse_expression."""
    return parse_expression
