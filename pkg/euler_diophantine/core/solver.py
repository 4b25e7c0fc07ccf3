"""Complete affine solution families of C{a[0]*x[0] + ... + a[s-1]*x[s-1] = n}.

Modes:

    - raw: the Euler-totient closed form, evaluated literally with a bit guard.
    - raw-b: the sibling closed form obtained by using the second two-variable
      formula at every step of the induction.
    - canonical: the same induction, but every two-variable step takes the
      residue in C{[0, |modulus|)} computed with L{mod_pow}, so no
      totient-sized powers are ever materialized.
    - form-a / form-b: the two closed forms for two variables.

Parameters C{t[0..s-2]} correspond to the 1-based C{t_1..t_{s-1}} of the
closed form; C{basis[m]} is the coefficient vector of C{t[m]}.
"""

import logging
from collections.abc import Callable, Sequence

from euler_diophantine.core.arith import (
    check_bits,
    euler_quotient,
    gcd,
    guarded_pow,
    mod_pow,
    totient,
)
from euler_diophantine.core.chain import ChainDecomposition, build_chain
from euler_diophantine.core.lattice import embed_family
from euler_diophantine.core.oracle import euclid_solve
from euler_diophantine.utils.config import DEFAULT_GUARD_BITS, FactorizationConfig
from euler_diophantine.utils.types import (
    DimensionMismatch,
    Equation,
    GeneralSolution,
    IntVector,
    NotSolvable,
    SolveMode,
    UnsupportedMode,
    ZeroCoefficient,
)

logger = logging.getLogger(__name__)


def _phi(n: int, factorization: FactorizationConfig | None) -> int:
    cfg = factorization or FactorizationConfig()
    return totient(
        n,
        trial_division_bound=cfg.trial_division_bound,
        rho_iterations=cfg.rho_iterations,
    )


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(f"Inexact division {numerator} / {denominator}.")
    return q


def _reduce_two(a: int, b: int, c: int) -> tuple[int, int, int]:
    if a == 0:
        raise ZeroCoefficient.from_position(0)
    if b == 0:
        raise ZeroCoefficient.from_position(1)
    g = gcd(a, b)
    if c % g:
        raise NotSolvable.from_gcd(g, c)
    return a // g, b // g, c // g


def solve_two_form_a(
    a: int,
    b: int,
    c: int,
    guard: int | None = DEFAULT_GUARD_BITS,
    *,
    factorization: FactorizationConfig | None = None,
) -> GeneralSolution:
    """First closed form for C{a*x + b*y = c}.

    With C{g = gcd(a, b)}, C{a0 = a/g}, C{b0 = b/g}, C{c0 = c/g}:

        x = c0 * a0**(phi(|b0|) - 1) + b0 * t
        y = c0 * (1 - a0**phi(|b0|)) / b0 - a0 * t

    @raises NotSolvable: If C{g} does not divide C{c}.
    @raises RawFormTooLarge: If a power exceeds C{guard} bits.
    """
    a0, b0, c0 = _reduce_two(a, b, c)
    phi_b = _phi(b0, factorization)
    x = check_bits(c0 * guarded_pow(a0, phi_b - 1, guard), guard)
    y = check_bits(
        c0 * euler_quotient(a0, b0, exponent=phi_b, guard=guard), guard
    )
    return GeneralSolution((x, y), ((b0, -a0),), SolveMode.FORM_A)


def solve_two_form_b(
    a: int,
    b: int,
    c: int,
    guard: int | None = DEFAULT_GUARD_BITS,
    *,
    factorization: FactorizationConfig | None = None,
) -> GeneralSolution:
    """Second closed form for C{a*x + b*y = c}, the mirror image of
    L{solve_two_form_a}:

        x = c0 * (1 - b0**phi(|a0|)) / a0 - b0 * t
        y = c0 * b0**(phi(|a0|) - 1) + a0 * t
    """
    a0, b0, c0 = _reduce_two(a, b, c)
    phi_a = _phi(a0, factorization)
    x = check_bits(
        c0 * euler_quotient(b0, a0, exponent=phi_a, guard=guard), guard
    )
    y = check_bits(c0 * guarded_pow(b0, phi_a - 1, guard), guard)
    return GeneralSolution((x, y), ((-b0, a0),), SolveMode.FORM_B)


def solve_raw(
    eq: Equation,
    guard: int | None = DEFAULT_GUARD_BITS,
    *,
    factorization: FactorizationConfig | None = None,
) -> GeneralSolution:
    """Literal evaluation of the Euler-totient closed form for all solutions.

    Indices inside follow the closed form (1-based). With
    C{P_i = d_bar_i ** (phi(|a_bar_{i+1}|) - 1)} and
    C{Q_k = (1 - d_bar_{k-1} ** phi(|a_bar_k|)) / a_bar_k}:

        x_1 = n1 * prod(P_1..P_{s-1}) + sum_m a_bar_{m+1} * prod(P_1..P_{m-1}) t_m
        x_k = n1 * Q_k * prod(P_k..P_{s-1}) - d_bar_{k-1} t_{k-1}
              + sum_{m>=2} a_bar_{m+1} * Q_k * prod(P_k..P_{m-1}) t_m

    A product whose upper index is one below its lower index is 1; two or more
    below, it annihilates its summand.

    @type eq: L{Equation}
    @param eq: Solvable equation with at least two nonzero coefficients.
    @type guard: int | None
    @param guard: Bit limit for every intermediate value.
    @rtype: L{GeneralSolution}
    @raises NotSolvable: If the gcd of the coefficients does not divide C{rhs}.
    @raises ZeroCoefficient: If a coefficient is zero.
    @raises RawFormTooLarge: If an intermediate value exceeds C{guard} bits.
    """
    chain = build_chain(eq.coeffs, eq.rhs)
    s = chain.s

    def a_bar(k: int) -> int:
        return chain.a_bar[k - 1]

    def d_bar(i: int) -> int:
        return chain.d_bar[i - 1]

    phi = {k: _phi(a_bar(k), factorization) for k in range(2, s + 1)}
    powers = {i: guarded_pow(d_bar(i), phi[i + 1] - 1, guard) for i in range(1, s)}
    quotients = {
        k: euler_quotient(d_bar(k - 1), a_bar(k), exponent=phi[k], guard=guard)
        for k in range(2, s + 1)
    }

    def product(lower: int, upper: int) -> int:
        if upper == lower - 1:
            return 1
        if upper < lower - 1:
            return 0
        result = 1
        for i in range(lower, upper + 1):
            result = check_bits(result * powers[i], guard, "power product")
        return result

    particular = [check_bits(chain.n1 * product(1, s - 1), guard)]
    for k in range(2, s + 1):
        particular.append(
            check_bits(chain.n1 * quotients[k] * product(k, s - 1), guard)
        )

    basis = []
    for m in range(1, s):
        vector = [check_bits(a_bar(m + 1) * product(1, m - 1), guard)]
        for k in range(2, s + 1):
            entry = -d_bar(k - 1) if m == k - 1 else 0
            if m >= 2:
                factor = product(k, m - 1)
                if factor:
                    entry += a_bar(m + 1) * quotients[k] * factor
            vector.append(check_bits(entry, guard))
        basis.append(tuple(vector))

    logger.debug(f"Raw family for {eq.coeffs} peaks at {_max_bits(particular)} bits")
    return GeneralSolution(tuple(particular), tuple(basis), SolveMode.RAW)


def solve_raw_form_b(
    eq: Equation,
    guard: int | None = DEFAULT_GUARD_BITS,
    *,
    factorization: FactorizationConfig | None = None,
) -> GeneralSolution:
    """Closed form built from the second two-variable formula at every step.

    At step C{k} (from the last variable down) the equation
    C{d_bar[k-1] * y + a_bar[k] * x[k] = c} is solved unreduced as

        y    = c * (1 - a_bar[k] ** phi(|d_bar[k-1]|)) / d_bar[k-1]
        x[k] = c * a_bar[k] ** (phi(|d_bar[k-1]|) - 1)

    and C{y} becomes the free term of the next step. Basis vector C{m} is
    C{(u, +d_bar[m], 0, ...)} where C{u} is the same descent started from
    C{-a_bar[m+1]}.

    @raises RawFormTooLarge: If an intermediate value exceeds C{guard} bits.
    """
    chain = build_chain(eq.coeffs, eq.rhs)

    def step(k: int, c: int) -> tuple[int, int]:
        a0, b0 = chain.d_bar[k - 1], chain.a_bar[k]
        phi_a = _phi(a0, factorization)
        x_k = check_bits(c * guarded_pow(b0, phi_a - 1, guard), guard)
        y = check_bits(
            c * euler_quotient(b0, a0, exponent=phi_a, guard=guard), guard
        )
        return y, x_k

    particular = _descend(chain, chain.s - 1, chain.n1, step)
    basis = [
        _pad(_descend(chain, m, -chain.a_bar[m + 1], step) + [chain.d_bar[m]], chain.s)
        for m in range(chain.s - 1)
    ]
    return GeneralSolution(tuple(particular), tuple(basis), SolveMode.RAW_B)


def solve_canonical(
    eq: Equation,
    *,
    factorization: FactorizationConfig | None = None,
) -> GeneralSolution:
    """Solves by the induction over the gcd chain with modular reduction.

    Step C{k} solves C{d_bar[k-1] * y + a_bar[k] * x[k] = c} taking
    C{y = c * d_bar[k-1] ** (phi(|a_bar[k]|) - 1) mod |a_bar[k]|} in
    C{[0, |a_bar[k]|)}; C{y} is then the free term of the step below. Basis
    vector C{m} is C{(u, -d_bar[m], 0, ...)} where C{u} solves the first
    C{m + 1} coefficients against C{d_chain[m-1] * a_bar[m+1]}.

    @raises NotSolvable: If the gcd of the coefficients does not divide C{rhs}.
    @raises ZeroCoefficient: If a coefficient is zero.
    """
    chain = build_chain(eq.coeffs, eq.rhs)

    def step(k: int, c: int) -> tuple[int, int]:
        a0, b0 = chain.d_bar[k - 1], chain.a_bar[k]
        modulus = abs(b0)
        y = c * mod_pow(a0, _phi(b0, factorization) - 1, modulus) % modulus
        return y, _exact_div(c - a0 * y, b0)

    particular = _descend(chain, chain.s - 1, chain.n1, step)
    basis = [
        _pad(_descend(chain, m, chain.a_bar[m + 1], step) + [-chain.d_bar[m]], chain.s)
        for m in range(chain.s - 1)
    ]
    return GeneralSolution(tuple(particular), tuple(basis), SolveMode.CANONICAL)


def _descend(
    chain: ChainDecomposition,
    top: int,
    c: int,
    step: Callable[[int, int], tuple[int, int]],
) -> list[int]:
    """Runs two-variable steps from index C{top} down to 1.

    Returns C{x[0..top]} solving the first C{top + 1} coefficients against
    C{d_chain[top-1] * c} (against C{a[0] * c} when C{top == 0}).
    """
    x = [0] * (top + 1)
    for k in range(top, 0, -1):
        c, x[k] = step(k, c)
    x[0] = c
    return x


def _pad(vector: list[int], size: int) -> IntVector:
    return tuple(vector + [0] * (size - len(vector)))


def _max_bits(values: Sequence[int]) -> int:
    return max((abs(v).bit_length() for v in values), default=0)


def evaluate(sol: GeneralSolution, t: Sequence[int]) -> IntVector:
    """Returns C{sol.particular + sum(t[m] * sol.basis[m])}.

    @raises DimensionMismatch: If C{len(t)} differs from the number of
        parameters.
    """
    if len(t) != sol.n_params:
        raise DimensionMismatch.from_lengths(sol.n_params, len(t), "parameter vector")
    x = list(sol.particular)
    for tm, vector in zip(t, sol.basis):
        if tm:
            for i, v in enumerate(vector):
                x[i] += tm * v
    return tuple(x)


def verify(eq: Equation, x: Sequence[int]) -> bool:
    """True iff C{x} solves C{eq} exactly.

    @raises DimensionMismatch: If C{len(x) != eq.size}.
    """
    if len(x) != eq.size:
        raise DimensionMismatch.from_lengths(eq.size, len(x), "solution vector")
    return sum(a * xi for a, xi in zip(eq.coeffs, x)) == eq.rhs


def is_homogeneous(eq: Equation, vector: Sequence[int]) -> bool:
    """True iff C{vector} solves the equation with right-hand side zero."""
    if len(vector) != eq.size:
        raise DimensionMismatch.from_lengths(eq.size, len(vector), "basis vector")
    return sum(a * v for a, v in zip(eq.coeffs, vector)) == 0


def has_triangular_tail(sol: GeneralSolution) -> bool:
    """True iff C{basis[m]} has a nonzero entry at C{m + 1} and zeros after."""
    for m, vector in enumerate(sol.basis):
        if m + 1 >= len(vector) or vector[m + 1] == 0:
            return False
        if any(vector[m + 2 :]):
            return False
    return True


def power_equation(
    m: int, n: int, guard: int | None = DEFAULT_GUARD_BITS
) -> tuple[GeneralSolution, GeneralSolution]:
    """Both closed forms for C{2**m * x + 3**n * y = 1}.

    Uses C{phi(2**m) = 2**m - 2**(m-1)} and C{phi(3**n) = 3**n - 3**(n-1)}
    directly, so no factorization happens.

    @rtype: tuple[L{GeneralSolution}, L{GeneralSolution}]
    @return: The form-A family and the form-B family.
    @raises ValueError: If C{m < 1} or C{n < 1}.
    @raises RawFormTooLarge: If a power exceeds C{guard} bits.
    """
    if m < 1 or n < 1:
        raise ValueError(f"Exponents must be positive, got m={m}, n={n}.")
    two_m, three_n = 2**m, 3**n
    phi_two = two_m - two_m // 2
    phi_three = three_n - three_n // 3

    form_a = GeneralSolution(
        (
            guarded_pow(2, m * (phi_three - 1), guard),
            _exact_div(1 - guarded_pow(2, m * phi_three, guard), three_n),
        ),
        ((three_n, -two_m),),
        SolveMode.FORM_A,
    )
    form_b = GeneralSolution(
        (
            _exact_div(1 - guarded_pow(3, n * phi_two, guard), two_m),
            guarded_pow(3, n * (phi_two - 1), guard),
        ),
        ((-three_n, two_m),),
        SolveMode.FORM_B,
    )
    return form_a, form_b


def _solve_core(
    core: Equation,
    mode: SolveMode,
    guard: int | None,
    factorization: FactorizationConfig | None,
) -> GeneralSolution:
    if mode in (SolveMode.FORM_A, SolveMode.FORM_B):
        two = solve_two_form_a if mode == SolveMode.FORM_A else solve_two_form_b
        return two(*core.coeffs, core.rhs, guard, factorization=factorization)
    if mode == SolveMode.RAW:
        return solve_raw(core, guard, factorization=factorization)
    if mode == SolveMode.RAW_B:
        return solve_raw_form_b(core, guard, factorization=factorization)
    if mode == SolveMode.ORACLE:
        return euclid_solve(core)
    return solve_canonical(core, factorization=factorization)


def solve(
    eq: Equation,
    mode: SolveMode = SolveMode.CANONICAL,
    guard: int | None = DEFAULT_GUARD_BITS,
    *,
    factorization: FactorizationConfig | None = None,
) -> GeneralSolution:
    """Solves any equation, including zero coefficients and a single variable.

    Zero-coefficient variables are free: they are removed before solving and
    come back as unit basis vectors placed after the core basis. A single
    nonzero coefficient yields the unique quotient. All-zero coefficients with
    zero right-hand side give the whole lattice.

    @type eq: L{Equation}
    @param eq: Equation to solve.
    @type mode: L{SolveMode}
    @param mode: Solver for the nonzero core.
    @type guard: int | None
    @param guard: Bit guard for raw and closed-form modes.
    @rtype: L{GeneralSolution}
    @raises NotSolvable: If the equation has no integer solution.
    @raises UnsupportedMode: If C{mode} is a two-variable form and the core
        does not have exactly two variables.
    @raises RawFormTooLarge: If a closed-form value exceeds C{guard} bits.
    """
    core_positions = [i for i, a in enumerate(eq.coeffs) if a != 0]
    free_positions = [i for i, a in enumerate(eq.coeffs) if a == 0]

    if mode in (SolveMode.FORM_A, SolveMode.FORM_B) and len(core_positions) != 2:
        raise UnsupportedMode(
            f"Mode `{mode}` needs exactly two nonzero coefficients, "
            f"got {len(core_positions)}."
        )
    if not core_positions:
        if eq.rhs != 0:
            raise NotSolvable.from_gcd(0, eq.rhs)
        return embed_family(GeneralSolution((), (), mode), [], eq.size)

    core = Equation(tuple(eq.coeffs[i] for i in core_positions), eq.rhs)
    if core.size == 1:
        a = core.coeffs[0]
        if eq.rhs % a:
            raise NotSolvable.from_gcd(abs(a), eq.rhs)
        core_sol = GeneralSolution((eq.rhs // a,), (), mode)
    else:
        core_sol = _solve_core(core, mode, guard, factorization)

    if not free_positions:
        return core_sol

    logger.info(
        f"Variables {[i + 1 for i in free_positions]} have zero coefficients "
        "and are free."
    )
    return embed_family(core_sol, core_positions, eq.size)
