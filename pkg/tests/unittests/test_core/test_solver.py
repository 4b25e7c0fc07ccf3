import math
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis.strategies import composite, integers, lists, sampled_from

from euler_diophantine.core.chain import build_chain
from euler_diophantine.core.lattice import echelon_pivots, express_in_parameters
from euler_diophantine.core.solver import (
    evaluate,
    has_triangular_tail,
    is_homogeneous,
    power_equation,
    solve,
    solve_canonical,
    solve_raw,
    solve_raw_form_b,
    solve_two_form_a,
    solve_two_form_b,
    verify,
)
from euler_diophantine.utils.types import (
    DimensionMismatch,
    Equation,
    GeneralSolution,
    NotInFamily,
    NotSolvable,
    RawFormTooLarge,
    SolveMode,
    UnsupportedMode,
    ZeroCoefficient,
)


@composite
def equations(draw, max_size=4, bound=12, allow_zero=False):
    values = integers(-bound, bound)
    if not allow_zero:
        values = values.filter(bool)
    coeffs = draw(lists(values, min_size=2, max_size=max_size))
    d = reduce(math.gcd, coeffs)
    if d == 0:
        return Equation(tuple(coeffs), 0)
    return Equation(tuple(coeffs), d * draw(integers(-50, 50)))


def assert_sound(eq: Equation, sol: GeneralSolution):
    assert verify(eq, sol.particular)
    assert all(is_homogeneous(eq, v) for v in sol.basis)


def test_two_form_a_examples():
    sol = solve_two_form_a(2, 3, 1)
    assert sol.particular == (2, -1)
    assert sol.basis == ((3, -2),)
    assert sol.mode == SolveMode.FORM_A

    assert solve_two_form_a(1, 1, 5).particular == (5, 0)
    assert solve_two_form_a(1, 1, 5).basis == ((1, -1),)

    sol = solve_two_form_a(4, 6, 2)
    assert sol.particular == (2, -1)
    assert sol.basis == ((3, -2),)


def test_two_form_b_examples():
    sol = solve_two_form_b(2, 3, 1)
    assert sol.particular == (-1, 1)
    assert sol.basis == ((-3, 2),)
    assert solve_two_form_b(1, 1, 5).particular == (0, 5)
    assert solve_two_form_b(4, 6, 2).particular == (-1, 1)


def test_two_forms_errors():
    with pytest.raises(NotSolvable):
        solve_two_form_a(4, 6, 3)
    with pytest.raises(NotSolvable):
        solve_two_form_b(4, 6, 3)
    with pytest.raises(ZeroCoefficient):
        solve_two_form_a(0, 6, 3)
    with pytest.raises(RawFormTooLarge):
        solve_two_form_a(2, 1000003, 1, guard=64)


def test_raw_examples():
    sol = solve_raw(Equation((2, 3), 1))
    assert sol.particular == (2, -1)
    assert sol.basis == ((3, -2),)

    sol = solve_raw(Equation((4, 3), 1))
    assert sol.particular == (4, -5)
    assert sol.basis == ((3, -4),)

    eq = Equation((2, 3, 5), 1)
    sol = solve_raw(eq)
    assert sol.particular == (2, -1, 0)
    assert sol.basis == ((3, -2, 0), (10, -5, -1))
    assert_sound(eq, sol)


def test_raw_three_variables():
    eq = Equation((6, 10, 15), 1)
    sol = solve_raw(eq)
    assert sol.particular == (3456, -2048, -17)
    assert sol.basis == ((5, -3, 0), (405, -240, -2))
    assert sol.mode == SolveMode.RAW
    assert_sound(eq, sol)


def test_raw_guard_and_errors():
    with pytest.raises(RawFormTooLarge):
        solve_raw(Equation((2, 1000003), 1), guard=64)
    with pytest.raises(ZeroCoefficient):
        solve_raw(Equation((2, 0, 3), 1))
    with pytest.raises(NotSolvable):
        solve_raw(Equation((4, 6), 3))


def test_canonical_examples():
    sol = solve_canonical(Equation((2, 3), 1))
    assert sol.particular == (2, -1)
    assert sol.basis == ((3, -2),)

    eq = Equation((6, 10, 15), 1)
    sol = solve_canonical(eq)
    assert sol.particular == (1, 1, -1)
    assert sol.basis == ((5, -3, 0), (0, 3, -2))
    assert all(abs(x) <= 15 for x in sol.particular)
    assert_sound(eq, sol)


@pytest.mark.parametrize("k, n", [(7, 5), (-4, 3), (3, 100), (1, -8), (-9, 0)])
def test_canonical_unit_leading(k, n):
    eq = Equation((1, k), n)
    sol = solve_canonical(eq)
    assert_sound(eq, sol)
    express_in_parameters(sol, (n, 0))


def test_canonical_errors():
    with pytest.raises(NotSolvable):
        solve_canonical(Equation((4, 6), 3))
    with pytest.raises(ZeroCoefficient):
        solve_canonical(Equation((4, 0), 4))


def test_raw_form_b():
    eq = Equation((2, 3), 1)
    sol = solve_raw_form_b(eq)
    expected = solve_two_form_b(2, 3, 1)
    assert sol.particular == expected.particular
    assert sol.basis == expected.basis

    eq = Equation((6, 10, 15), 1)
    sol = solve_raw_form_b(eq)
    assert sol.particular == (56, -35, 1)
    assert sol.mode == SolveMode.RAW_B
    assert_sound(eq, sol)


def test_evaluate():
    sol = solve_two_form_a(2, 3, 1)
    assert evaluate(sol, [0]) == sol.particular
    assert evaluate(sol, [1]) == (5, -3)
    assert evaluate(sol, [-1]) == (-1, 1)
    with pytest.raises(DimensionMismatch):
        evaluate(sol, [1, 2])


def test_verify():
    eq = Equation((2, 3), 1)
    assert verify(eq, (2, -1))
    assert not verify(eq, (1, 0))
    assert verify(Equation((7,), 0), (0,))
    with pytest.raises(DimensionMismatch):
        verify(eq, (1, 2, 3))


def test_express_in_parameters():
    sol = solve_two_form_a(2, 3, 1)
    assert express_in_parameters(sol, sol.particular) == (0,)
    assert express_in_parameters(sol, (5, -3)) == (1,)
    with pytest.raises(NotInFamily):
        express_in_parameters(sol, (1, 0))
    with pytest.raises(DimensionMismatch):
        express_in_parameters(sol, (1, 0, 0))

    not_echelon = GeneralSolution((0, 0), ((1, 1), (2, 1)))
    with pytest.raises(NotInFamily):
        express_in_parameters(not_echelon, (3, 2))


def test_echelon_and_tail():
    sol = solve_canonical(Equation((6, 10, 15), 1))
    assert has_triangular_tail(sol)
    assert echelon_pivots(sol.basis) == [1, 2]
    assert echelon_pivots(((1, 0), (0, 0))) is None
    assert echelon_pivots(((1, 1), (2, 1))) is None
    assert not has_triangular_tail(GeneralSolution((0, 0, 0), ((1, 0, 1),)))


def test_power_equation():
    form_a, form_b = power_equation(1, 1)
    assert form_a.particular == (2, -1)
    assert form_a.basis == ((3, -2),)
    assert form_b.particular == (-1, 1)
    assert form_b.basis == ((-3, 2),)

    assert power_equation(2, 1)[0].particular == (4, -5)
    form_a, form_b = power_equation(1, 2)
    assert form_a.particular == (32, -7)
    assert form_b.particular == (-4, 1)

    with pytest.raises(ValueError):
        power_equation(0, 1)
    with pytest.raises(RawFormTooLarge):
        power_equation(6, 6, guard=100)


def test_solve_facade():
    sol = solve(Equation((5,), 10))
    assert sol.particular == (2,)
    assert sol.basis == ()

    sol = solve(Equation((0, 2, 3), 1))
    assert sol.particular == (0, 2, -1)
    assert (1, 0, 0) in sol.basis
    assert (0, 3, -2) in sol.basis
    assert express_in_parameters(sol, (7, 5, -3)) is not None

    with pytest.raises(NotSolvable):
        solve(Equation((5,), 7))


def test_solve_all_zero():
    sol = solve(Equation((0, 0), 0))
    assert sol.particular == (0, 0)
    assert sol.basis == ((1, 0), (0, 1))
    with pytest.raises(NotSolvable):
        solve(Equation((0, 0), 3))


def test_solve_modes():
    eq = Equation((0, 2, 3), 1)
    assert solve(eq, SolveMode.FORM_B).basis[0] == (0, -3, 2)
    assert solve(eq, SolveMode.ORACLE).mode == SolveMode.ORACLE
    with pytest.raises(UnsupportedMode):
        solve(Equation((6, 10, 15), 1), SolveMode.FORM_A)
    with pytest.raises(UnsupportedMode):
        solve(Equation((5,), 10), SolveMode.FORM_B)


@pytest.mark.parametrize(
    "mode",
    [SolveMode.RAW, SolveMode.RAW_B, SolveMode.CANONICAL, SolveMode.ORACLE],
)
@given(eq=equations(max_size=3), t=lists(integers(-1000, 1000), min_size=3))
@settings(deadline=None, max_examples=60)
def test_solve_round_trip(mode, eq, t):
    sol = solve(eq, mode)
    assert_sound(eq, sol)
    assert has_triangular_tail(sol)
    params = tuple(t[: sol.n_params])
    assert express_in_parameters(sol, evaluate(sol, params)) == params


@given(equations(max_size=5, allow_zero=True), sampled_from([0, 1, -1]))
@settings(deadline=None, max_examples=80)
def test_solve_with_free_variables(eq, shift):
    try:
        sol = solve(eq)
    except NotSolvable:
        assert eq.rhs != 0
        return
    assert_sound(eq, sol)
    params = tuple([shift] * sol.n_params)
    assert express_in_parameters(sol, evaluate(sol, params)) == params


@given(equations(max_size=6, bound=10**4))
@settings(deadline=None, max_examples=60)
def test_canonical_tail_pivot(eq):
    sol = solve_canonical(eq)
    chain = build_chain(eq.coeffs, eq.rhs)
    for m, vector in enumerate(sol.basis):
        assert vector[m + 1] == -chain.d_bar[m]
        assert not any(vector[m + 2 :])
