"""Classical extended-Euclid solver and lattice-equivalence checks.

Nothing here touches the gcd chain or Euler's function: the solver below is
built from L{ext_gcd} alone so that it can serve as an independent reference
for the closed-form families.
"""

import logging
from bisect import bisect_left
from collections.abc import Sequence

from euler_diophantine.core.arith import ext_gcd
from euler_diophantine.core.lattice import (
    echelon_pivots,
    embed_family,
    express_in_parameters,
)
from euler_diophantine.utils.types import (
    DimensionMismatch,
    Equation,
    GeneralSolution,
    NotInFamily,
    NotSolvable,
    SolveMode,
    ZeroCoefficient,
)

logger = logging.getLogger(__name__)


def euclid_solve(eq: Equation) -> GeneralSolution:
    """Solves by folding the extended Euclidean algorithm over the prefixes.

    With C{G[k] = gcd(a[0..k])} and a Bezout vector C{w[k]} of that prefix,
    C{(G[k], u, v) = ext_gcd(G[k-1], a[k])} gives C{w[k] = u * w[k-1] + [v]}.
    The particular solution is C{(n / G[s-1]) * w[s-1]}; basis vector C{m} is
    C{((a[m+1] / G[m+1]) * w[m], -G[m] / G[m+1], 0, ...)}.

    @type eq: L{Equation}
    @param eq: Equation with nonzero coefficients.
    @rtype: L{GeneralSolution}
    @raises ZeroCoefficient: If a coefficient is zero.
    @raises NotSolvable: If the gcd of the coefficients does not divide C{rhs}.
    """
    a = eq.coeffs
    for i, x in enumerate(a):
        if x == 0:
            raise ZeroCoefficient.from_position(i)

    prefix_gcds = [abs(a[0])]
    bezout = [[1 if a[0] > 0 else -1]]
    for k in range(1, eq.size):
        g, u, v = ext_gcd(prefix_gcds[-1], a[k])
        prefix_gcds.append(g)
        bezout.append([u * w for w in bezout[-1]] + [v])

    g = prefix_gcds[-1]
    if eq.rhs % g:
        raise NotSolvable.from_gcd(g, eq.rhs)
    scale = eq.rhs // g
    particular = tuple(scale * w for w in bezout[-1])

    basis = []
    for m in range(eq.size - 1):
        g_next = prefix_gcds[m + 1]
        factor = a[m + 1] // g_next
        vector = [factor * w for w in bezout[m]] + [-prefix_gcds[m] // g_next]
        basis.append(tuple(vector + [0] * (eq.size - len(vector))))

    return GeneralSolution(particular, tuple(basis), SolveMode.ORACLE)


class IntegerLattice:
    """Mutable integer lattice kept in row echelon form.

    Each stored row has its first nonzero entry at a distinct column and that
    entry is positive. New generators are reduced against the stored rows;
    when a pivot does not divide the incoming entry both rows are replaced by
    the unimodular combination given by the extended gcd.
    """

    __slots__ = ["dimension", "rows", "pivot_columns"]

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.rows: list[list[int]] = []
        self.pivot_columns: list[int] = []

    @classmethod
    def from_vectors(
        cls, dimension: int, vectors: Sequence[Sequence[int]]
    ) -> "IntegerLattice":
        lattice = cls(dimension)
        for vector in vectors:
            lattice.add_vector(vector)
        return lattice

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _row_at(self, column: int) -> int | None:
        i = bisect_left(self.pivot_columns, column)
        if i < len(self.pivot_columns) and self.pivot_columns[i] == column:
            return i
        return None

    def __contains__(self, vector: Sequence[int]) -> bool:
        if len(vector) != self.dimension:
            raise DimensionMismatch.from_lengths(
                self.dimension, len(vector), "lattice vector"
            )
        vec = list(vector)
        for j in range(self.dimension):
            if vec[j] == 0:
                continue
            p = self._row_at(j)
            if p is None:
                return False
            row = self.rows[p]
            q, r = divmod(vec[j], row[j])
            if r:
                return False
            for jj in range(j, self.dimension):
                vec[jj] -= q * row[jj]
        return True

    def add_vector(self, vector: Sequence[int]) -> None:
        """Adds a generator, keeping the rows in echelon form."""
        if len(vector) != self.dimension:
            raise DimensionMismatch.from_lengths(
                self.dimension, len(vector), "lattice vector"
            )
        vec = list(vector)
        for j in range(self.dimension):
            if vec[j] == 0:
                continue
            p = self._row_at(j)
            if p is None:
                if vec[j] < 0:
                    vec = [-v for v in vec]
                where = bisect_left(self.pivot_columns, j)
                self.rows.insert(where, vec)
                self.pivot_columns.insert(where, j)
                return
            row = self.rows[p]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, self.dimension):
                    vec[jj] -= q * row[jj]
                continue
            g, x, y = ext_gcd(a, b)
            a_g, mb_g = a // g, -b // g
            for jj in range(j, self.dimension):
                aa, bb = row[jj], vec[jj]
                row[jj] = x * aa + y * bb
                vec[jj] = mb_g * aa + a_g * bb


def _in_family(sol: GeneralSolution, x: Sequence[int]) -> bool:
    try:
        express_in_parameters(sol, x)
    except NotInFamily:
        return False
    return True


def _contained(sol_a: GeneralSolution, sol_b: GeneralSolution) -> bool:
    """True iff every point of C{sol_a} lies in C{sol_b}."""
    if echelon_pivots(sol_b.basis) is not None:
        homogeneous = GeneralSolution((0,) * sol_b.size, sol_b.basis, sol_b.mode)
        return _in_family(sol_b, sol_a.particular) and all(
            _in_family(homogeneous, v) for v in sol_a.basis
        )
    lattice = IntegerLattice.from_vectors(sol_b.size, sol_b.basis)
    shift = [pa - pb for pa, pb in zip(sol_a.particular, sol_b.particular)]
    return shift in lattice and all(v in lattice for v in sol_a.basis)


def lattice_equivalent(
    sol_a: GeneralSolution, sol_b: GeneralSolution, eq: Equation
) -> bool:
    """True iff both families describe exactly the same set of integer points.

    Each family's particular solution must differ from the other's by a
    lattice vector, and each basis must lie in the other's lattice. Echelon
    bases are tested by back-substitution, anything else through an
    L{IntegerLattice}.

    @raises DimensionMismatch: If either family does not have C{eq.size}
        components.
    """
    for sol in (sol_a, sol_b):
        if sol.size != eq.size:
            raise DimensionMismatch.from_lengths(eq.size, sol.size, "solution family")
    equivalent = _contained(sol_a, sol_b) and _contained(sol_b, sol_a)
    if not equivalent:
        logger.debug(f"Families {sol_a.mode} and {sol_b.mode} differ for `{eq}`")
    return equivalent


def reference_solve(eq: Equation) -> GeneralSolution:
    """L{euclid_solve} extended to zero coefficients and a single variable.

    Variables with a zero coefficient are free and get unit basis vectors.

    @raises NotSolvable: If the equation has no integer solution.
    """
    positions = [i for i, a in enumerate(eq.coeffs) if a]
    core = [eq.coeffs[i] for i in positions]
    if len(core) >= 2:
        family = euclid_solve(Equation(tuple(core), eq.rhs))
    elif core:
        if eq.rhs % core[0]:
            raise NotSolvable.from_gcd(abs(core[0]), eq.rhs)
        family = GeneralSolution((eq.rhs // core[0],), (), SolveMode.ORACLE)
    else:
        if eq.rhs:
            raise NotSolvable.from_gcd(0, eq.rhs)
        family = GeneralSolution((), (), SolveMode.ORACLE)
    if len(positions) == eq.size:
        return family
    return embed_family(family, positions, eq.size)


def oracle_check(eq: Equation, sol: GeneralSolution) -> bool:
    """Compares C{sol} against the extended-Euclid family of C{eq}."""
    return lattice_equivalent(sol, reference_solve(eq), eq)
