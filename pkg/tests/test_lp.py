from fractions import Fraction

from mgl.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, simplex_maximize, solve_free_lp


def F(x):
    return Fraction(x)


def test_simple_maximize():
    # max x0 + x1 s.t. x0 + x1 + s = 4
    status, x, value = simplex_maximize([[1, 1, 1]], [4], [1, 1, 0])
    assert status == OPTIMAL
    assert value == 4


def test_infeasible():
    # x0 = -1 with x0 >= 0 is impossible
    status, _, _ = simplex_maximize([[1]], [-1], [1])
    assert status == INFEASIBLE


def test_unbounded():
    # max x0 with no constraints binding it: x0 - x1 = 0
    status, _, _ = simplex_maximize([[1, -1]], [0], [1, 0])
    assert status == UNBOUNDED


def test_exact_fractions():
    # max x0 s.t. 3 x0 + s = 1
    status, x, value = simplex_maximize([[3, 1]], [1], [1, 0])
    assert status == OPTIMAL
    assert value == F(1) / 3


def test_free_lp_strict_via_slack():
    # maximize s with y - x - s >= 0 and s <= 1: feasible, s* = 1
    status, point = solve_free_lp(
        3,
        [],
        [({1: F(1), 0: F(-1), 2: F(-1)}, F(0)), ({2: F(-1)}, F(-1)), ({2: F(1)}, F(0))],
        {2: F(1)},
    )
    assert status == OPTIMAL
    assert point[2] == 1
    assert point[1] - point[0] >= 1


def test_free_lp_contradiction():
    # x < y and y < x expressed with a shared positive slack
    status, point = solve_free_lp(
        3,
        [],
        [
            ({1: F(1), 0: F(-1), 2: F(-1)}, F(0)),
            ({0: F(1), 1: F(-1), 2: F(-1)}, F(0)),
            ({2: F(-1)}, F(-1)),
            ({2: F(1)}, F(1)),
        ],
        {2: F(1)},
    )
    assert status == INFEASIBLE


def test_free_lp_unbounded_objective():
    status, _ = solve_free_lp(1, [], [({0: F(1)}, F(0))], {0: F(1)})
    assert status == UNBOUNDED


def test_equalities_respected():
    status, point = solve_free_lp(
        2,
        [({0: F(1), 1: F(1)}, F(3))],
        [({0: F(1)}, F(0)), ({1: F(1)}, F(0)), ({0: F(-1)}, F(-3))],
        {0: F(1)},
    )
    assert status == OPTIMAL
    assert point[0] + point[1] == 3
    assert point[0] == 3
