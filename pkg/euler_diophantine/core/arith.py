"""Exact integer primitives: gcd, extended gcd, modular exponentiation,
factorization and Euler's totient.

Every function here is pure and safe to call from any number of threads.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator

import gmpy2

from euler_diophantine.utils.config import (
    DEFAULT_RHO_ITERATIONS,
    DEFAULT_TRIAL_DIVISION_BOUND,
)
from euler_diophantine.utils.types import FactorizationLimitExceeded, RawFormTooLarge

logger = logging.getLogger(__name__)

POWMOD_GMP_SIZE = 2**64

PRIMALITY_LIMIT = 3317044064679887385961981
"""Exclusive upper bound below which L{is_prime} is deterministic."""

_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as C{(prime, exponent)} pairs with strictly increasing
    primes."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("Primes must be strictly increasing.")
        if any(p < 2 or e < 1 for p, e in self.factors):
            raise ValueError("Primes must be > 1 and exponents >= 1.")

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor, C{gcd(0, 0) == 0}."""
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def gcd_many(values: "list[int] | tuple[int, ...]") -> int:
    """Folds L{gcd} over a sequence."""
    return reduce(gcd, values, 0)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid.

    @rtype: tuple[int, int, int]
    @return: C{(g, u, v)} with C{g = gcd(a, b) >= 0} and C{a*u + b*v == g}.
    """
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Computes C{base**exp} reduced into C{[0, modulus)}.

    Negative bases are reduced first. Small operands go through the built-in
    three-argument C{pow}, large ones through C{gmpy2.powmod}.

    @type base: int
    @param base: Any integer.
    @type exp: int
    @param exp: Nonnegative exponent.
    @type modulus: int
    @param modulus: Modulus, at least 1.
    @rtype: int
    @return: Canonical representative in C{[0, modulus)}.
    @raises ValueError: If C{exp < 0} or C{modulus < 1}.
    """
    if exp < 0:
        raise ValueError(f"Exponent must be nonnegative, got {exp}.")
    if modulus < 1:
        raise ValueError(f"Modulus must be at least 1, got {modulus}.")
    base %= modulus
    if max(base, exp, modulus) < POWMOD_GMP_SIZE:
        return pow(base, exp, modulus)
    return int(gmpy2.powmod(base, exp, modulus))


def _miller_rabin_witness(a: int, u: int, t: int, n: int) -> bool:
    """Returns True if C{a} proves that C{n} is composite."""
    a %= n
    if a <= 1:
        return False
    x = pow(a, u, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(t - 1):
        x = pow(x, 2, n)
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test.

    The first 13 primes as bases decide primality for every
    C{n < PRIMALITY_LIMIT}.

    @raises ValueError: If C{n >= PRIMALITY_LIMIT}.
    """
    if n < 2:
        return False
    for p in _MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    if n >= PRIMALITY_LIMIT:
        raise ValueError(
            f"Deterministic primality check only covers n < {PRIMALITY_LIMIT}."
        )
    u, t = n - 1, 0
    while u % 2 == 0:
        u //= 2
        t += 1
    return not any(_miller_rabin_witness(a, u, t, n) for a in _MILLER_RABIN_BASES)


def pollard_brent(n: int, budget: int = DEFAULT_RHO_ITERATIONS) -> int:
    """Finds a nontrivial factor of an odd composite C{n}.

    Brent's cycle detection with deterministic seeds C{c = 1, 2, ...}.

    @type budget: int
    @param budget: Total number of iterations allowed across all seeds.
    @raises FactorizationLimitExceeded: If no factor is found within C{budget}.
    """
    if n % 2 == 0:
        return 2
    spent = 0
    c = 0
    while spent < budget:
        c += 1
        y, r, q = 2, 1, 1
        x = ys = y
        g = 1
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            logger.debug(f"Pollard-Brent split {n} after {spent} iterations (c={c}).")
            return g
    raise FactorizationLimitExceeded(
        f"Pollard-Brent found no factor of {n} within {budget} iterations."
    )


def factorize(
    n: int,
    *,
    trial_division_bound: int = DEFAULT_TRIAL_DIVISION_BOUND,
    rho_iterations: int = DEFAULT_RHO_ITERATIONS,
) -> Factorization:
    """Complete prime factorization of C{n >= 2}.

    Trial division runs up to C{trial_division_bound}; a cofactor left over is
    split with L{pollard_brent} and every part is certified by L{is_prime}.

    @type n: int
    @param n: Integer to factorize, at least 2.
    @type trial_division_bound: int
    @param trial_division_bound: Largest trial divisor.
    @type rho_iterations: int
    @param rho_iterations: Iteration budget for L{pollard_brent}.
    @rtype: L{Factorization}
    @return: Factorization of C{n}.
    @raises ValueError: If C{n < 2}.
    @raises FactorizationLimitExceeded: If a cofactor cannot be certified
        within the budget.
    """
    if n < 2:
        raise ValueError(f"Can only factorize integers >= 2, got {n}.")

    counts: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    p, step = 5, 2
    while p <= trial_division_bound and p * p <= m:
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
        p += step
        step = 6 - step

    if m > 1:
        if p * p > m:
            counts[m] = counts.get(m, 0) + 1
        else:
            for q in _split_cofactor(m, rho_iterations):
                counts[q] = counts.get(q, 0) + 1

    return Factorization(tuple(sorted(counts.items())))


def _split_cofactor(m: int, budget: int) -> list[int]:
    if m >= PRIMALITY_LIMIT:
        raise FactorizationLimitExceeded(
            f"Cofactor {m} exceeds the deterministic primality range."
        )
    if is_prime(m):
        return [m]
    logger.info(f"Trial division left composite cofactor {m}, switching to rho.")
    d = pollard_brent(m, budget)
    return _split_cofactor(d, budget) + _split_cofactor(m // d, budget)


def totient(
    n: int,
    *,
    trial_division_bound: int = DEFAULT_TRIAL_DIVISION_BOUND,
    rho_iterations: int = DEFAULT_RHO_ITERATIONS,
) -> int:
    """Euler's function of C{|n|}, with C{totient(1) == totient(-1) == 1}.

    @raises ValueError: If C{n == 0}.
    @raises FactorizationLimitExceeded: Propagated from L{factorize}.
    """
    if n == 0:
        raise ValueError("Totient is undefined for 0.")
    return _totient(abs(n), trial_division_bound, rho_iterations)


@lru_cache(maxsize=8192)
def _totient(n: int, trial_division_bound: int, rho_iterations: int) -> int:
    if n == 1:
        return 1
    result = n
    for p, _ in factorize(
        n, trial_division_bound=trial_division_bound, rho_iterations=rho_iterations
    ):
        result = result // p * (p - 1)
    return result


def guarded_pow(base: int, exp: int, guard: int | None = None) -> int:
    """Computes C{base**exp} exactly, refusing results wider than C{guard} bits.

    @type guard: int | None
    @param guard: Maximum bit length of the result, C{None} for no limit.
    @raises RawFormTooLarge: If the result would need more than C{guard} bits.
    @raises ValueError: If C{exp < 0}.
    """
    if exp < 0:
        raise ValueError(f"Exponent must be nonnegative, got {exp}.")
    if guard is None or exp == 0 or abs(base) <= 1:
        return base**exp
    lower_bound = exp * (abs(base).bit_length() - 1) + 1
    if lower_bound > guard:
        raise RawFormTooLarge.from_bits(lower_bound, guard, f"power {base}^{exp}")
    result = base**exp
    check_bits(result, guard, f"power {base}^{exp}")
    return result


def check_bits(value: int, guard: int | None, what: str = "intermediate value"):
    """Raises L{RawFormTooLarge} if C{value} is wider than C{guard} bits."""
    if guard is not None and abs(value).bit_length() > guard:
        raise RawFormTooLarge.from_bits(abs(value).bit_length(), guard, what)
    return value


def euler_quotient(
    a: int,
    b: int,
    *,
    exponent: int | None = None,
    guard: int | None = None,
    **kwargs,
) -> int:
    """Exact quotient C{(1 - a**totient(b)) / b} for coprime C{a}, C{b}.

    Euler's lemma guarantees the division is exact; a nonzero remainder means
    the inputs were not coprime.

    @type exponent: int | None
    @param exponent: Precomputed C{totient(b)}; computed when omitted.
    @type guard: int | None
    @param guard: Bit guard for the power, see L{guarded_pow}.
    @raises ArithmeticError: If C{b} does not divide C{1 - a**totient(b)}.
    """
    if exponent is None:
        exponent = totient(b, **kwargs)
    numerator = 1 - guarded_pow(a, exponent, guard)
    q, r = divmod(numerator, b)
    if r:
        raise ArithmeticError(
            f"{b} does not divide 1 - {a}^phi(|{b}|); inputs are not coprime."
        )
    return q
