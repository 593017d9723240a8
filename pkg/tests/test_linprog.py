import random
from fractions import Fraction

import pytest

from polyindex import InputError, LinearProgram, solve_lp
from polyindex.linalg import dot
from polyindex.scalars import EXACT, float_context


def test_single_binding_constraint():
    # minimize x subject to x >= 3 (written as -x <= -3)
    sol = solve_lp(LinearProgram(objective=(1,), ineq_lhs=[(-1,)], ineq_rhs=(-3,)))
    assert sol.is_optimal
    assert sol.value == Fraction(3)
    assert sol.point == (Fraction(3),)


def test_absolute_value_reformulation():
    # minimize t subject to -t <= x <= t and x = 5/17
    lp = LinearProgram(objective=(0, 1),
                       ineq_lhs=[(1, -1), (-1, -1)], ineq_rhs=(0, 0),
                       eq_lhs=[(1, 0)], eq_rhs=(Fraction(5, 17),))
    sol = solve_lp(lp)
    assert sol.value == Fraction(5, 17)


def test_infeasible():
    # x <= -1 together with x >= 1
    lp = LinearProgram(objective=(0,), ineq_lhs=[(1,), (-1,)], ineq_rhs=(-1, -1))
    assert solve_lp(lp).status == "infeasible"


def test_unbounded():
    lp = LinearProgram(objective=(1,), ineq_lhs=[(1,)], ineq_rhs=(3,))
    assert solve_lp(lp).status == "unbounded"


def test_nonneg_flags():
    # minimize -x subject to x <= 2, x >= 0
    lp = LinearProgram(objective=(-1,), ineq_lhs=[(1,)], ineq_rhs=(2,), nonneg=(True,))
    sol = solve_lp(lp)
    assert sol.value == Fraction(-2)


def test_malformed_dimensions():
    with pytest.raises(InputError):
        LinearProgram(objective=(1, 2), ineq_lhs=[(1,)], ineq_rhs=(0,))
    with pytest.raises(InputError):
        LinearProgram(objective=(1,), ineq_lhs=[(1,)], ineq_rhs=())
    with pytest.raises(InputError):
        LinearProgram(objective=())
    with pytest.raises(InputError):
        LinearProgram(objective=(1,), nonneg=(True, False))


def test_degenerate_repeated_constraints_terminate():
    # Heavily duplicated rows; Bland's rule must still terminate.
    rows = [(-1, 0), (-1, 0), (-1, 0), (0, -1), (0, -1), (1, 1), (1, 1), (1, 1)]
    rhs = (0, 0, 0, 0, 0, 1, 1, 1)
    lp = LinearProgram(objective=(-1, -2), ineq_lhs=rows, ineq_rhs=rhs)
    sol = solve_lp(lp)
    assert sol.is_optimal
    assert sol.value == Fraction(-2)
    assert sol.point == (Fraction(0), Fraction(1))


def _random_lp_with_known_optimum(rng, n):
    """Embed a known vertex optimum: pick x*, n independent tight rows a_i
    (a_i . x <= a_i . x*), loose extra rows, and c = -sum(lambda_i a_i)
    with lambda_i > 0, which certifies x* as the unique minimizer."""
    while True:
        xstar = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n))
        tight = [tuple(Fraction(rng.randint(-4, 4)) for _ in range(n)) for _ in range(n)]
        from polyindex.linalg import rank
        if rank(tight, EXACT) == n:
            break
    lhs = list(tight)
    rhs = [dot(a, xstar) for a in tight]
    for _ in range(rng.randint(1, 3)):
        a = tuple(Fraction(rng.randint(-4, 4)) for _ in range(n))
        lhs.append(a)
        rhs.append(dot(a, xstar) + Fraction(rng.randint(1, 5)))
    lam = [Fraction(rng.randint(1, 4)) for _ in range(n)]
    c = tuple(-sum(lam[i] * tight[i][j] for i in range(n)) for j in range(n))
    return LinearProgram(objective=c, ineq_lhs=lhs, ineq_rhs=rhs), xstar


def test_random_lps_recover_embedded_optimum():
    rng = random.Random(20240811)
    for _ in range(40):
        n = rng.randint(2, 4)
        lp, xstar = _random_lp_with_known_optimum(rng, n)
        sol = solve_lp(lp)
        assert sol.is_optimal
        assert sol.value == dot(lp.objective, xstar)


def test_optimal_point_satisfies_constraints_exactly():
    rng = random.Random(7)
    for _ in range(25):
        lp, _ = _random_lp_with_known_optimum(rng, rng.randint(2, 3))
        sol = solve_lp(lp)
        assert sol.is_optimal
        for row, b in zip(lp.ineq_lhs, lp.ineq_rhs):
            assert dot(row, sol.point) <= b
        # Reported value always re-derives from the returned point.
        assert sol.value == dot(lp.objective, sol.point)


def test_float_backend():
    lp = LinearProgram(objective=(1.0,), ineq_lhs=[(-1.0,)], ineq_rhs=(-3.0,))
    sol = solve_lp(lp, float_context())
    assert sol.is_optimal
    assert abs(sol.value - 3.0) < 1e-9


def test_equality_only_system():
    lp = LinearProgram(objective=(1, 1), eq_lhs=[(1, 1)], eq_rhs=(2,))
    sol = solve_lp(lp)
    assert sol.is_optimal and sol.value == Fraction(2)


def test_redundant_equalities_dropped():
    lp = LinearProgram(objective=(1,), eq_lhs=[(1,), (1,), (2,)], eq_rhs=(1, 1, 2))
    sol = solve_lp(lp)
    assert sol.is_optimal and sol.value == Fraction(1)


def test_basis_certificate_reported():
    sol = solve_lp(LinearProgram(objective=(1,), ineq_lhs=[(-1,)], ineq_rhs=(-3,)))
    assert sol.basis and all(isinstance(i, int) for i in sol.basis)
