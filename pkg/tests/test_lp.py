import numpy as np
import pytest
from scipy.optimize import linprog

from inradius.errors import Infeasible, Unbounded
from inradius.lp import is_feasible, maximize


def test_textbook_problem():
    # max 2x + 3y, x + y <= 100, 6x + 3y <= 360, x + 2y <= 120, x, y >= 0 -> (80, 20)
    A = [[1, 1], [6, 3], [1, 2], [-1, 0], [0, -1]]
    b = [100, 360, 120, 0, 0]
    sol = maximize([2, 3], A, b)
    np.testing.assert_allclose(sol.z, [40, 40])
    assert sol.value == pytest.approx(200)


def test_unbounded_objective():
    with pytest.raises(Unbounded):
        maximize([1, 0], [[-1, 0], [0, 1], [0, -1]], [0, 1, 1])


def test_rows_not_spanning():
    # a strip: x bounded, y free; the optimum of max -x is a whole line
    with pytest.raises(Unbounded):
        maximize([-1, 0], [[1, 0], [-1, 0]], [1, 1])


def test_infeasible():
    with pytest.raises(Infeasible):
        maximize([0, 1], [[1, 0], [-1, 0], [0, 1], [0, -1]], [-1, -1, 1, 1])
    assert not is_feasible([[1, 0], [-1, 0], [0, 1], [0, -1]], [-1, -1, 1, 1])
    assert is_feasible([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 1, 1])


@pytest.mark.parametrize("seed", range(5))
def test_agrees_with_highs(seed):
    rng = np.random.default_rng(seed)
    for _ in range(40):
        k = int(rng.integers(2, 5))
        m = int(rng.integers(k + 1, 80))
        A = rng.normal(size=(m, k))
        b = rng.uniform(0.1, 3.0, size=m)  # origin strictly feasible
        c = rng.normal(size=k)
        ref = linprog(-c, A_ub=A, b_ub=b, bounds=[(None, None)] * k, method="highs")
        if ref.status == 3:
            with pytest.raises(Unbounded):
                maximize(c, A, b)
            continue
        assert ref.status == 0
        sol = maximize(c, A, b)
        assert sol.value == pytest.approx(-ref.fun, rel=1e-10, abs=1e-10)
        assert np.all(A @ sol.z <= b + 1e-9)


def test_degenerate_vertex_terminates():
    # 200 constraints all tight at the optimum of a regular polygon's Chebyshev problem
    t = 2 * np.pi * np.arange(200) / 200
    N = np.column_stack([np.cos(t), np.sin(t)])
    A = np.hstack([N, np.ones((200, 1))])
    sol = maximize([0, 0, 1], A, np.ones(200))
    np.testing.assert_allclose(sol.z, [0, 0, 1], atol=1e-12)
