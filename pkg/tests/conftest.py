from fractions import Fraction

import pytest

from borelcurve.action import ActionModel, principal_model, validate
from borelcurve.curve import build_curve_ring
from borelcurve.gkm import GKMGraph


def jordan_block(size: int):
    return tuple(tuple(Fraction(1) if j == i + 1 else Fraction(0) for j in range(size))
                 for i in range(size))


@pytest.fixture(scope="session")
def plane_model():
    """The diag(t^2, 1, t^-2) action on P^2 with the standard nilpotent."""
    return validate(ActionModel(2, (2, 0, -2), jordan_block(3)))


@pytest.fixture(scope="session")
def plane_ring(plane_model):
    return build_curve_ring(plane_model)


@pytest.fixture(scope="session")
def line_model():
    return principal_model(1)


@pytest.fixture(scope="session")
def curves_union_graph():
    """Congruence graph of the union of the two invariant curves in P^2:
    each curve joins o to one of the other fixed points."""
    return GKMGraph((1, 2, 3), ((1, 2, 1), (1, 3, 1)))
