import pytest
from click.testing import CliRunner

from qgrobner.models.algebra import DeformationMatrix
from qgrobner.services.qspace import new_quantum_space
from qgrobner.utils.naming import QP_PREFIX


@pytest.fixture
def line():
    """A^1_q with its single parameter q."""
    return new_quantum_space(1)


@pytest.fixture
def plane():
    """A^2_q with parameters q10, q20, q21."""
    return new_quantum_space(2)


@pytest.fixture
def segre_factors():
    def build(n, m):
        return DeformationMatrix.generic(n + 1), DeformationMatrix.generic(m + 1, prefix=QP_PREFIX)

    return build


@pytest.fixture
def runner():
    return CliRunner()
