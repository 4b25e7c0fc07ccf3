"""Basis bookkeeping shared by the closed-form solvers and the reference solver.

Nothing here knows how a family was produced; it only looks at the shape of
the basis.
"""

from collections.abc import Sequence

from euler_diophantine.utils.types import (
    DimensionMismatch,
    GeneralSolution,
    IntVector,
    NotInFamily,
)


def echelon_pivots(basis: Sequence[Sequence[int]]) -> list[int] | None:
    """Positions of the last nonzero entry of every basis vector.

    @rtype: list[int] | None
    @return: Pivot positions, or C{None} if some vector is zero or two vectors
        share a pivot position.
    """
    pivots = []
    for vector in basis:
        nonzero = [i for i, v in enumerate(vector) if v]
        if not nonzero:
            return None
        pivots.append(nonzero[-1])
    if len(set(pivots)) != len(pivots):
        return None
    return pivots


def express_in_parameters(sol: GeneralSolution, x: Sequence[int]) -> IntVector:
    """Finds the unique C{t} with C{evaluate(sol, t) == x}.

    Back-substitutes from the highest pivot position down; each pivot entry
    fixes one parameter, and the remaining components are checked for
    consistency at the end.

    @raises DimensionMismatch: If C{len(x) != sol.size}.
    @raises NotInFamily: If the basis is not in echelon form, a division is
        inexact, or the consistency check fails.
    """
    if len(x) != sol.size:
        raise DimensionMismatch.from_lengths(sol.size, len(x), "solution vector")
    pivots = echelon_pivots(sol.basis)
    if pivots is None:
        raise NotInFamily("Basis is not in echelon form; back-substitution impossible.")

    residual = [xi - pi for xi, pi in zip(x, sol.particular)]
    t = [0] * sol.n_params
    for m in sorted(range(sol.n_params), key=lambda m: pivots[m], reverse=True):
        vector = sol.basis[m]
        p = pivots[m]
        q, r = divmod(residual[p], vector[p])
        if r:
            raise NotInFamily(
                f"Component {p} of {tuple(x)} is not reachable: "
                f"{residual[p]} is not a multiple of {vector[p]}."
            )
        t[m] = q
        if q:
            residual = [ri - q * vi for ri, vi in zip(residual, vector)]
    if any(residual):
        raise NotInFamily(f"{tuple(x)} is not a member of the family.")
    return tuple(t)


def unit_vectors(positions: Sequence[int], size: int) -> list[IntVector]:
    return [tuple(int(i == p) for i in range(size)) for p in positions]


def embed_family(
    core: GeneralSolution, positions: Sequence[int], size: int
) -> GeneralSolution:
    """Lifts a family over the variables at C{positions} to C{size} variables.

    The remaining variables are free: they are zero in the particular solution
    and each gets a unit basis vector, placed after the lifted core basis.
    """
    if len(positions) != core.size:
        raise DimensionMismatch.from_lengths(core.size, len(positions), "positions")
    free = sorted(set(range(size)) - set(positions))

    def lift(vector: Sequence[int]) -> IntVector:
        embedded = [0] * size
        for i, value in zip(positions, vector):
            embedded[i] = value
        return tuple(embedded)

    basis = [lift(v) for v in core.basis] + unit_vectors(free, size)
    return GeneralSolution(lift(core.particular), tuple(basis), core.mode)
