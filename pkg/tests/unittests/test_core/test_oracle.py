import ast
import math
from functools import reduce
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis.strategies import composite, integers, lists

from euler_diophantine.core import oracle
from euler_diophantine.core.oracle import (
    IntegerLattice,
    euclid_solve,
    lattice_equivalent,
    oracle_check,
    reference_solve,
)
from euler_diophantine.core.solver import (
    is_homogeneous,
    solve,
    solve_canonical,
    solve_two_form_a,
    solve_two_form_b,
    verify,
)
from euler_diophantine.utils.types import (
    DimensionMismatch,
    Equation,
    GeneralSolution,
    NotSolvable,
    SolveMode,
    ZeroCoefficient,
)


@composite
def solvable_equations(draw, max_size=8, bound=10**4):
    coeffs = draw(
        lists(integers(-bound, bound).filter(bool), min_size=2, max_size=max_size)
    )
    return Equation(tuple(coeffs), reduce(math.gcd, coeffs) * draw(integers(-50, 50)))


def test_euclid_examples():
    sol = euclid_solve(Equation((2, 3), 1))
    assert sol.particular == (-1, 1)
    assert sol.basis == ((3, -2),)
    assert sol.mode == SolveMode.ORACLE

    sol = euclid_solve(Equation((1, 1), 0))
    assert sol.particular == (0, 0)
    assert sol.basis == ((1, -1),)

    eq = Equation((6, 10, 15), 1)
    sol = euclid_solve(eq)
    assert verify(eq, sol.particular)
    assert all(is_homogeneous(eq, v) for v in sol.basis)


def test_euclid_errors():
    with pytest.raises(NotSolvable):
        euclid_solve(Equation((4, 6), 3))
    with pytest.raises(ZeroCoefficient):
        euclid_solve(Equation((4, 0), 4))


PACKAGE_ROOT = Path(oracle.__file__).parents[2]


def _imports(module: str) -> dict[str, set[str]]:
    path = PACKAGE_ROOT.joinpath(*module.split("."))
    if path.is_dir():
        path, package = path / "__init__.py", module
    else:
        path, package = path.with_suffix(".py"), module.rpartition(".")[0]
    imports: dict[str, set[str]] = {}
    for node in ast.walk(ast.parse(path.read_text())):
        if isinstance(node, ast.ImportFrom):
            name = node.module or ""
            if node.level:
                base = package.rsplit(".", node.level - 1)[0]
                name = f"{base}.{name}" if name else base
            imports.setdefault(name, set()).update(a.name for a in node.names)
        elif isinstance(node, ast.Import):
            for alias in node.names:
                imports.setdefault(alias.name, set())
    return {k: v for k, v in imports.items() if k.startswith("euler_diophantine")}


def test_oracle_is_independent():
    seen, stack = set(), ["euler_diophantine.core.oracle"]
    while stack:
        module = stack.pop()
        if module not in seen:
            seen.add(module)
            stack.extend(_imports(module))
    assert "euler_diophantine.core.chain" not in seen
    assert "euler_diophantine.core.solver" not in seen
    direct = _imports("euler_diophantine.core.oracle")
    assert direct["euler_diophantine.core.arith"] == {"ext_gcd"}


@given(solvable_equations())
@settings(deadline=None, max_examples=80)
def test_euclid_sound(eq):
    sol = euclid_solve(eq)
    assert verify(eq, sol.particular)
    assert all(is_homogeneous(eq, v) for v in sol.basis)
    assert len(sol.basis) == eq.size - 1


def test_lattice_equivalent_examples():
    eq = Equation((2, 3), 1)
    form_a = solve_two_form_a(2, 3, 1)
    form_b = solve_two_form_b(2, 3, 1)
    assert lattice_equivalent(form_a, form_a, eq)
    assert lattice_equivalent(form_a, form_b, eq)

    doubled = GeneralSolution(form_a.particular, ((6, -4),))
    assert not lattice_equivalent(form_a, doubled, eq)
    assert not lattice_equivalent(doubled, form_a, eq)

    with pytest.raises(DimensionMismatch):
        lattice_equivalent(form_a, form_b, Equation((2, 3, 5), 1))


def test_lattice_equivalent_non_echelon():
    eq = Equation((2, 3), 1)
    form_a = solve_two_form_a(2, 3, 1)
    redundant = GeneralSolution((5, -3), ((3, -2), (-3, 2)))
    assert lattice_equivalent(redundant, form_a, eq)
    assert lattice_equivalent(form_a, redundant, eq)
    shifted = GeneralSolution((6, -3), ((3, -2), (-3, 2)))
    assert not lattice_equivalent(form_a, shifted, eq)


def test_integer_lattice():
    lattice = IntegerLattice.from_vectors(2, [(2, 0), (0, 3)])
    assert lattice.rank == 2
    assert (4, 3) in lattice
    assert (1, 0) not in lattice
    lattice.add_vector((3, 0))
    assert (1, 0) in lattice
    assert lattice.rank == 2

    lattice = IntegerLattice(3)
    lattice.add_vector((-3, 2, 0))
    assert lattice.rows == [[3, -2, 0]]
    lattice.add_vector((6, -4, 0))
    assert lattice.rank == 1
    assert (0, 0, 1) not in lattice
    with pytest.raises(DimensionMismatch):
        _ = (1, 2) in lattice


def test_oracle_check():
    eq = Equation((0, 6, 10, 15), 1)
    assert oracle_check(eq, solve(eq))
    assert oracle_check(eq, solve(eq, SolveMode.RAW))


@given(solvable_equations())
@settings(deadline=None, max_examples=60)
def test_canonical_matches_oracle(eq):
    assert lattice_equivalent(solve_canonical(eq), euclid_solve(eq), eq)
    assert lattice_equivalent(euclid_solve(eq), solve_canonical(eq), eq)


def test_reference_solve_free_variables():
    eq = Equation((0, 2, 0, 3), 1)
    sol = reference_solve(eq)
    assert sol.particular == (0, -1, 0, 1)
    assert sol.basis == ((0, 3, 0, -2), (1, 0, 0, 0), (0, 0, 1, 0))
    assert reference_solve(Equation((0, 4), 8)).particular == (0, 2)
    assert reference_solve(Equation((0, 0), 0)).n_params == 2
    with pytest.raises(NotSolvable):
        reference_solve(Equation((0, 4), 2))
    with pytest.raises(NotSolvable):
        reference_solve(Equation((0, 0), 1))
