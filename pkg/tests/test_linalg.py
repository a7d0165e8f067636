from fractions import Fraction

from skewlr.linalg import LinearSolver


def test_solves_square_system():
    # columns are sparse mappings key -> value
    solver = LinearSolver([{"x": 1, "y": 1}, {"x": 1, "y": -1}])
    sol = solver.solve({"x": 3, "y": 1})
    assert sol == [Fraction(2), Fraction(1)]


def test_exact_rational_answer():
    solver = LinearSolver([{0: 2}, {0: 0, 1: 3}])
    sol = solver.solve({0: 1, 1: 1})
    assert sol == [Fraction(1, 2), Fraction(1, 3)]


def test_inconsistent_target_returns_none():
    solver = LinearSolver([{"x": 1}])
    assert solver.solve({"x": 1, "y": 1}) is None


def test_target_with_unknown_row_returns_none():
    solver = LinearSolver([{"a": 1, "b": 2}])
    assert solver.solve({"c": 5}) is None


def test_overdetermined_consistent():
    # one column spanning three rows
    solver = LinearSolver([{0: 1, 1: 2, 2: 3}])
    assert solver.solve({0: 2, 1: 4, 2: 6}) == [Fraction(2)]
    assert solver.solve({0: 2, 1: 4, 2: 7}) is None


def test_redundant_columns():
    solver = LinearSolver([{0: 1}, {0: 2}])
    sol = solver.solve({0: 4})
    assert sol is not None
    assert sol[0] + 2 * sol[1] == 4


def test_zero_target():
    solver = LinearSolver([{0: 1, 1: 1}, {1: 1}])
    assert solver.solve({}) == [Fraction(0), Fraction(0)]
