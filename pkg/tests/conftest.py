import numpy as np
import dualgame as dg
import pytest


@pytest.fixture
def game():
    return dg.DualGame(n=1, alpha=1.0)


@pytest.fixture
def informative_state():
    # x = 1, u = 1 under A = 1, i = +1 gives x_next = 2
    triple = dg.DataTriple(x_next=[2.0], x=[1.0], u=[1.0])
    return dg.GameState.initial(np.array([1.0])).update(triple)
