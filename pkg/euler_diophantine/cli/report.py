"""Serializable reports for the command-line interface.

Integers are written as decimal strings in JSON so that values of any size
survive any JSON reader.
"""

from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, field_serializer, field_validator

from euler_diophantine.core.solver import evaluate, verify
from euler_diophantine.utils.types import Equation, GeneralSolution, SolveMode


def _to_int(value: Any) -> Any:
    if isinstance(value, str):
        return int(value)
    if isinstance(value, (list, tuple)):
        return [_to_int(v) for v in value]
    return value


def _to_str(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_to_str(v) for v in value]
    return value


class EquationModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coeffs: list[int]
    rhs: int

    @field_validator("coeffs", "rhs", mode="before")
    @classmethod
    def parse_decimal(cls, v: Any) -> Any:
        return _to_int(v)

    @field_serializer("coeffs", "rhs")
    def dump_decimal(self, v: Any, _) -> Any:
        return _to_str(v)

    @classmethod
    def from_equation(cls, eq: Equation) -> "EquationModel":
        return cls(coeffs=list(eq.coeffs), rhs=eq.rhs)

    def to_equation(self) -> Equation:
        return Equation(tuple(self.coeffs), self.rhs)


class SolveReport(BaseModel):
    """Result of a single solve, as emitted by the CLI.

    C{verified} is always the result of L{verify} on the emitted particular
    solution, never a copied flag.
    """

    model_config = ConfigDict(extra="forbid")

    equation: EquationModel
    mode: str | None = None
    particular: list[int] = []
    basis: list[list[int]] = []
    verified: bool = False
    max_bits: int = 0
    oracle_checked: bool | None = None
    point: list[int] | None = None
    point_verified: bool | None = None
    error: str | None = None

    @field_validator("particular", "basis", "point", mode="before")
    @classmethod
    def parse_decimal(cls, v: Any) -> Any:
        return _to_int(v)

    @field_serializer("particular", "basis", "point")
    def dump_decimal(self, v: Any, _) -> Any:
        return _to_str(v)

    @classmethod
    def from_solution(
        cls,
        eq: Equation,
        sol: GeneralSolution,
        *,
        oracle_checked: bool | None = None,
        params: Sequence[int] | None = None,
    ) -> "SolveReport":
        """Builds a report, evaluating the family at C{params} when given.

        @raises DimensionMismatch: If C{params} has the wrong length.
        """
        point = None
        point_verified = None
        max_bits = sol.max_bits
        if params is not None:
            point = list(evaluate(sol, params))
            point_verified = verify(eq, point)
            max_bits = max([max_bits, *(abs(x).bit_length() for x in point)])
        return cls(
            equation=EquationModel.from_equation(eq),
            mode=str(sol.mode),
            particular=list(sol.particular),
            basis=[list(v) for v in sol.basis],
            verified=verify(eq, sol.particular),
            max_bits=max_bits,
            oracle_checked=oracle_checked,
            point=point,
            point_verified=point_verified,
        )

    @classmethod
    def from_error(cls, eq: Equation, error: Exception) -> "SolveReport":
        return cls(equation=EquationModel.from_equation(eq), error=str(error))

    @classmethod
    def from_json(cls, text: str) -> "SolveReport":
        return cls.model_validate_json(text)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)

    def to_solution(self) -> GeneralSolution:
        return GeneralSolution(
            tuple(self.particular),
            tuple(tuple(v) for v in self.basis),
            SolveMode(self.mode),
        )

    def to_plain(self) -> str:
        eq = self.equation.to_equation()
        lines = [f"equation: {eq}"]
        if self.error is not None:
            lines.append(f"error: {self.error}")
            return "\n".join(lines)
        lines.append(f"mode: {self.mode}")
        lines.append(f"particular: {_tuple(self.particular)}")
        if self.basis:
            lines.append("basis:")
            lines += [f"  t{m}: {_tuple(v)}" for m, v in enumerate(self.basis, 1)]
        else:
            lines.append("basis: none")
        lines.append(f"verified: {str(self.verified).lower()}")
        if self.oracle_checked is not None:
            lines.append(f"oracle_checked: {str(self.oracle_checked).lower()}")
        if self.point is not None:
            lines.append(f"point: {_tuple(self.point)}")
            lines.append(f"point_verified: {str(self.point_verified).lower()}")
        lines.append(f"max_bits: {self.max_bits}")
        return "\n".join(lines)

    def to_latex(self) -> str:
        """One row per variable, C{x_k = p_k + sum_m B_m[k] t_m}, with
        1-based parameters."""
        rows = []
        for k, p in enumerate(self.particular):
            column = [v[k] for v in self.basis]
            rows.append(f"x_{{{k + 1}}} = {_latex_affine(p, column)}")
        body = " \\\\\n".join(rows)
        return f"\\begin{{array}}{{l}}\n{body}\n\\end{{array}}"


class PowerReport(BaseModel):
    """Both closed forms for C{2**m * x + 3**n * y = 1}."""

    model_config = ConfigDict(extra="forbid")

    m: int
    n: int
    form_a: SolveReport
    form_b: SolveReport

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)

    def to_plain(self) -> str:
        return (
            f"[form-a]\n{self.form_a.to_plain()}\n\n[form-b]\n{self.form_b.to_plain()}"
        )

    def to_latex(self) -> str:
        return f"{self.form_a.to_latex()}\n\n{self.form_b.to_latex()}"


def _tuple(values: Sequence[int]) -> str:
    return f"({', '.join(str(v) for v in values)})"


def _latex_affine(constant: int, coefficients: Sequence[int]) -> str:
    terms = [] if constant == 0 else [str(constant)]
    for m, c in enumerate(coefficients, 1):
        if c == 0:
            continue
        magnitude = "" if abs(c) == 1 else f"{abs(c)} "
        body = f"{magnitude}t_{{{m}}}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(terms) if terms else "0"
