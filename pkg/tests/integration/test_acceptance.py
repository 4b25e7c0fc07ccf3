import itertools
import math
import random
from functools import reduce

import pytest

from euler_diophantine.core.arith import mod_pow, totient
from euler_diophantine.core.chain import build_chain
from euler_diophantine.core.lattice import express_in_parameters
from euler_diophantine.core.oracle import euclid_solve, lattice_equivalent
from euler_diophantine.core.solver import (
    evaluate,
    has_triangular_tail,
    is_homogeneous,
    power_equation,
    solve_canonical,
    solve_raw,
    solve_raw_form_b,
    solve_two_form_a,
    solve_two_form_b,
    verify,
)
from euler_diophantine.utils.types import Equation

SEED = 20240501


def random_equation(
    rng: random.Random, sizes: tuple[int, int], bound: int, n1_bound: int
) -> Equation:
    s = rng.randint(*sizes)
    coeffs = [rng.choice([-1, 1]) * rng.randint(1, bound) for _ in range(s)]
    d = reduce(math.gcd, coeffs)
    return Equation(tuple(coeffs), d * rng.randint(-n1_bound, n1_bound))


def test_power_equation_forms():
    for m, n in itertools.product(range(1, 7), repeat=2):
        eq = Equation((2**m, 3**n), 1)
        form_a, form_b = power_equation(m, n)
        assert verify(eq, form_a.particular)
        assert verify(eq, form_b.particular)
        raw = solve_raw(eq)
        assert raw.particular == form_a.particular
        assert raw.basis == form_a.basis


def test_euler_lemma():
    rng = random.Random(SEED)
    checked = 0
    while checked < 1000:
        a = rng.randint(-(10**6), 10**6)
        b = rng.randint(-(10**6), 10**6)
        if abs(b) <= 1 or math.gcd(a, b) != 1:
            continue
        assert mod_pow(a, totient(b), abs(b)) == 1
        checked += 1


def test_soundness():
    rng = random.Random(SEED + 1)
    for _ in range(1000):
        eq = random_equation(rng, (2, 8), 10**4, 10**6)
        sol = solve_canonical(eq)
        assert verify(eq, sol.particular)
        assert all(is_homogeneous(eq, v) for v in sol.basis)
        assert has_triangular_tail(sol)
        chain = build_chain(eq.coeffs, eq.rhs)
        assert all(v[m + 1] == -chain.d_bar[m] for m, v in enumerate(sol.basis))
        for _ in range(10):
            t = tuple(rng.randint(-1000, 1000) for _ in range(sol.n_params))
            assert express_in_parameters(sol, evaluate(sol, t)) == t


def _brute_force(eq: Equation, bound: int):
    if eq.size == 2:
        a, b = eq.coeffs
        for x in range(-bound, bound + 1):
            y, r = divmod(eq.rhs - a * x, b)
            if r == 0 and abs(y) <= bound:
                yield (x, y)
        return
    a, b, c = eq.coeffs
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            z, r = divmod(eq.rhs - a * x - b * y, c)
            if r == 0 and abs(z) <= bound:
                yield (x, y, z)


def test_completeness():
    rng = random.Random(SEED + 2)
    for _ in range(200):
        eq = random_equation(rng, (2, 3), 10, 5)
        sol = solve_canonical(eq)
        for x in _brute_force(eq, 50):
            t = express_in_parameters(sol, x)
            assert evaluate(sol, t) == x


def test_oracle_equivalence():
    rng = random.Random(SEED + 3)
    for _ in range(500):
        eq = random_equation(rng, (2, 8), 10**4, 10**6)
        assert lattice_equivalent(solve_canonical(eq), euclid_solve(eq), eq)

    for _ in range(500):
        eq = random_equation(rng, (2, 2), 1000, 1000)
        a, b = eq.coeffs
        form_a = solve_two_form_a(a, b, eq.rhs)
        form_b = solve_two_form_b(a, b, eq.rhs)
        assert lattice_equivalent(form_a, form_b, eq)


@pytest.mark.parametrize("guard", [2**16])
def test_raw_canonical_agreement(guard):
    rng = random.Random(SEED + 4)
    for _ in range(200):
        eq = random_equation(rng, (2, 4), 50, 1000)
        raw = solve_raw(eq, guard)
        canonical = solve_canonical(eq)
        assert lattice_equivalent(raw, canonical, eq)
        assert lattice_equivalent(solve_raw_form_b(eq, guard), canonical, eq)
        express_in_parameters(raw, canonical.particular)
        if eq.size == 2:
            expected = solve_two_form_a(*eq.coeffs, eq.rhs)
            assert raw.particular == expected.particular
            assert raw.basis == expected.basis


def test_totient_brute_force():
    for n in range(1, 10**4 + 1):
        expected = list(map(math.gcd, range(1, n + 1), itertools.repeat(n))).count(1)
        assert totient(n) == expected
