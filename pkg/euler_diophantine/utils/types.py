from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "Basis",
    "CrossCheckFailed",
    "DimensionMismatch",
    "DiophantineError",
    "Equation",
    "FactorizationLimitExceeded",
    "GeneralSolution",
    "IntVector",
    "NotInFamily",
    "NotSolvable",
    "ParseError",
    "RawFormTooLarge",
    "SolveMode",
    "UnsupportedMode",
    "ZeroCoefficient",
]

IntVector = tuple[int, ...]
"""Immutable integer vector. All solver inputs and outputs use this shape."""

Basis = tuple[IntVector, ...]
"""Basis of the homogeneous lattice. Vector C{m} is the coefficient of the
parameter C{t[m]}."""


class SolveMode(str, Enum):
    """How a L{GeneralSolution} was produced."""

    RAW = "raw"
    RAW_B = "raw-b"
    CANONICAL = "canonical"
    FORM_A = "form-a"
    FORM_B = "form-b"
    ORACLE = "oracle"

    def __str__(self):
        return self.value


class DiophantineError(Exception):
    """Base class for every error raised by this package."""


class NotSolvable(DiophantineError):
    """Raised when the gcd of the coefficients does not divide the right-hand
    side."""

    @classmethod
    def from_gcd(cls, d: int, rhs: int):
        return cls(
            f"Equation has no integer solutions: gcd of coefficients {d} "
            f"does not divide right-hand side {rhs}."
        )


class ZeroCoefficient(DiophantineError, ValueError):
    """Raised when a zero coefficient reaches code that needs nonzero ones."""

    @classmethod
    def from_position(cls, position: int):
        return cls(
            f"Coefficient at position {position} is zero. Zero-coefficient "
            "variables are free and must be eliminated before building the chain."
        )


class RawFormTooLarge(DiophantineError):
    """Raised when a closed-form intermediate value exceeds the bit guard."""

    @classmethod
    def from_bits(cls, bits: int, guard: int, what: str = "intermediate value"):
        return cls(
            f"Raw form {what} needs about {bits} bits, which exceeds the "
            f"guard of {guard} bits. Use canonical mode or raise the guard."
        )


class FactorizationLimitExceeded(DiophantineError):
    """Raised when a factorization would exceed the configured effort budget."""


class DimensionMismatch(DiophantineError, ValueError):
    """Raised when vector lengths do not agree."""

    @classmethod
    def from_lengths(cls, expected: int, got: int, what: str):
        return cls(f"Expected {what} of length {expected}, got length {got}.")


class NotInFamily(DiophantineError):
    """Raised when a vector cannot be written in the parameters of a family."""


class UnsupportedMode(DiophantineError, ValueError):
    """Raised when a solve mode cannot handle the given equation shape."""


class CrossCheckFailed(DiophantineError):
    """Raised when a produced family disagrees with the reference solver or
    fails its own verification."""


class ParseError(DiophantineError, ValueError):
    """Raised when an equation string does not follow the grammar.

    @type text: str
    @ivar text: The offending input.
    @type position: int
    @ivar position: 0-based character offset of the error.
    @type expected: str
    @ivar expected: Description of what the parser expected at C{position}.
    """

    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(
            f"Expected {expected} at position {position}:\n"
            f"  {text}\n  {' ' * position}^"
        )


@dataclass(frozen=True)
class Equation:
    """Linear indeterminate equation C{coeffs[0]*x[0] + ... = rhs}.

    @type coeffs: L{IntVector}
    @ivar coeffs: Coefficients in variable-index order. Zero entries are allowed
        here; the solver treats them as free variables.
    @type rhs: int
    @ivar rhs: Right-hand side (free term).
    """

    coeffs: IntVector
    rhs: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        object.__setattr__(self, "rhs", int(self.rhs))
        if not self.coeffs:
            raise ValueError("Equation needs at least one coefficient.")

    @property
    def size(self) -> int:
        """Number of variables C{s}."""
        return len(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs, start=1):
            sign = "-" if a < 0 else "+"
            body = f"{abs(a)}*x{i}"
            if not terms:
                terms.append(f"-{body}" if a < 0 else body)
            else:
                terms.append(f"{sign} {body}")
        return f"{' '.join(terms)} = {self.rhs}"


@dataclass(frozen=True)
class GeneralSolution:
    """Affine family C{particular + sum(t[m] * basis[m])} of integer solutions.

    Instances are immutable and safe to share between threads.

    @type particular: L{IntVector}
    @ivar particular: The solution at C{t = 0}.
    @type basis: L{Basis}
    @ivar basis: Generators of the homogeneous solution lattice.
    @type mode: L{SolveMode}
    @ivar mode: Solver that produced the family.
    """

    particular: IntVector
    basis: Basis = field(default_factory=tuple)
    mode: SolveMode = SolveMode.CANONICAL

    def __post_init__(self):
        object.__setattr__(self, "particular", tuple(self.particular))
        object.__setattr__(self, "basis", tuple(tuple(v) for v in self.basis))
        for vector in self.basis:
            if len(vector) != len(self.particular):
                raise DimensionMismatch.from_lengths(
                    len(self.particular), len(vector), "basis vector"
                )

    @property
    def size(self) -> int:
        return len(self.particular)

    @property
    def n_params(self) -> int:
        return len(self.basis)

    @property
    def max_bits(self) -> int:
        """Largest bit length of any integer in the family."""
        values = [*self.particular, *(x for v in self.basis for x in v)]
        return max((abs(x).bit_length() for x in values), default=0)
