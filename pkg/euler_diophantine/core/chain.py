"""Gcd-chain decomposition of a coefficient vector.

For coefficients C{a[0..s-1]} the chain is

    - C{d_chain[i] = gcd(a[0], ..., a[i+1])} (positive), so C{d_chain[-1]} is
      the gcd C{d} of all coefficients,
    - C{a_bar[0] = a[0] / d_chain[0]} and C{a_bar[i] = a[i] / d_chain[i-1]}
      for C{i >= 1},
    - C{d_bar[0] = a_bar[0]} and C{d_bar[i] = d_chain[i-1] / d_chain[i]} for
      C{i >= 1},
    - C{n1 = n / d}.

Divisors are positive, so C{a_bar[i]} carries the sign of C{a[i]} and
C{d_bar[0]} may be negative while every other cofactor is positive.
"""

import logging
from dataclasses import dataclass

from euler_diophantine.core.arith import gcd, gcd_many
from euler_diophantine.utils.types import IntVector, NotSolvable, ZeroCoefficient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainDecomposition:
    """Immutable gcd chain of an equation with at least two nonzero
    coefficients."""

    a: IntVector
    d_chain: IntVector
    a_bar: IntVector
    d_bar: IntVector
    n: int
    n1: int

    @property
    def s(self) -> int:
        return len(self.a)

    @property
    def d(self) -> int:
        return self.d_chain[-1]

    def check(self) -> None:
        """Asserts every structural invariant of the decomposition.

        @raises AssertionError: If any invariant is violated.
        """
        s = self.s
        assert s >= 2 and len(self.d_chain) == s - 1
        assert len(self.a_bar) == s and len(self.d_bar) == s - 1
        assert self.d * self.n1 == self.n
        assert all(d > 0 for d in self.d_chain)
        assert self.a[0] == self.d_chain[0] * self.a_bar[0]
        for i in range(1, s):
            assert self.a[i] == self.d_chain[i - 1] * self.a_bar[i]
        assert self.d_bar[0] == self.a_bar[0]
        for i in range(1, s - 1):
            assert self.d_chain[i - 1] == self.d_chain[i] * self.d_bar[i]
            assert self.d_bar[i] > 0
        assert gcd(self.a_bar[0], self.a_bar[1]) == 1
        for i in range(1, s - 1):
            assert gcd(self.d_bar[i], self.a_bar[i + 1]) == 1


def solvable(coeffs: "IntVector | list[int]", n: int) -> bool:
    """True iff the gcd of C{coeffs} divides C{n}.

    @raises ValueError: If C{coeffs} is empty.
    """
    if not coeffs:
        raise ValueError("At least one coefficient is required.")
    d = gcd_many(coeffs)
    if d == 0:
        return n == 0
    return n % d == 0


def build_chain(coeffs: "IntVector | list[int]", n: int) -> ChainDecomposition:
    """Builds the gcd chain of C{coeffs} with right-hand side C{n}.

    @type coeffs: IntVector | list[int]
    @param coeffs: At least two nonzero coefficients.
    @type n: int
    @param n: Right-hand side.
    @rtype: L{ChainDecomposition}
    @return: Decomposition satisfying every invariant checked by
        L{ChainDecomposition.check}.
    @raises ValueError: If fewer than two coefficients are given.
    @raises ZeroCoefficient: If any coefficient is zero.
    @raises NotSolvable: If the gcd of the coefficients does not divide C{n}.
    """
    a = tuple(int(x) for x in coeffs)
    if len(a) < 2:
        raise ValueError(
            f"The gcd chain needs at least two coefficients, got {len(a)}."
        )
    for i, x in enumerate(a):
        if x == 0:
            raise ZeroCoefficient.from_position(i)

    d_chain = [gcd(a[0], a[1])]
    for x in a[2:]:
        d_chain.append(gcd(d_chain[-1], x))

    d = d_chain[-1]
    if n % d != 0:
        raise NotSolvable.from_gcd(d, n)

    a_bar = [a[0] // d_chain[0]]
    a_bar += [a[i] // d_chain[i - 1] for i in range(1, len(a))]
    d_bar = [a_bar[0]]
    d_bar += [d_chain[i - 1] // d_chain[i] for i in range(1, len(a) - 1)]

    chain = ChainDecomposition(
        a=a,
        d_chain=tuple(d_chain),
        a_bar=tuple(a_bar),
        d_bar=tuple(d_bar),
        n=n,
        n1=n // d,
    )
    logger.debug(
        f"Chain for {a}: d_chain={chain.d_chain}, a_bar={chain.a_bar}, "
        f"d_bar={chain.d_bar}, n1={chain.n1}"
    )
    return chain
