"""Equation text parser.

Two forms are accepted::

    coefficient form   INT ("," INT)* "=" INT            "4, -6, 10 = 2"
    symbolic form      TERM (("+" | "-") TERM)* "=" INT  "4x1 - 6x2 + 10x3 = 2"

    TERM  := [INT ["*"]] "x" INDEX
    INT   := ["+" | "-"] DIGITS

Whitespace is ignored. In symbolic form the first term may carry a sign,
repeated variables are summed and variables that never appear get a zero
coefficient.
"""

import re
from collections.abc import Iterator
from typing import NamedTuple, NoReturn

from euler_diophantine.utils.types import Equation, ParseError

MAX_VARIABLE_INDEX = 10_000
"""Largest variable index accepted in symbolic form."""

_TOKENS = {
    "var": r"[xX](?P<index>\d+)",
    "int": r"\d+",
    "plus": r"\+",
    "minus": r"-",
    "times": r"\*",
    "comma": r",",
    "equal": r"=",
    "skip": r"\s+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))


class Token(NamedTuple):
    kind: str
    value: int | str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    """Splits C{text} into tokens, ending with an C{end} token.

    @raises ParseError: On a character outside the grammar.
    """
    for mo in _REGEX.finditer(text):
        kind = str(mo.lastgroup)
        if kind == "skip":
            continue
        if kind == "error":
            raise ParseError(
                text, mo.start(), "a digit, `x`, `+`, `-`, `*`, `,` or `=`"
            )
        if kind == "var":
            yield Token(kind, int(mo.group("index")), mo.start())
        elif kind == "int":
            yield Token(kind, int(mo.group()), mo.start())
        else:
            yield Token(kind, mo.group(), mo.start())
    yield Token("end", "", len(text))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(tokenize(text))
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.pos += 1
        return token

    def accept(self, *kinds: str) -> Token | None:
        if self.current.kind in kinds:
            return self.advance()
        return None

    def expect(self, kind: str, description: str) -> Token:
        if self.current.kind != kind:
            self.fail(description)
        return self.advance()

    def fail(self, description: str) -> NoReturn:
        raise ParseError(self.text, self.current.position, description)

    def signed_int(self) -> int:
        sign = self._sign()
        return sign * int(self.expect("int", "an integer").value)

    def _sign(self) -> int:
        token = self.accept("plus", "minus")
        return -1 if token is not None and token.kind == "minus" else 1

    def parse(self) -> Equation:
        if any(t.kind == "var" for t in self.tokens):
            coeffs = self.symbolic()
        else:
            coeffs = self.coefficient_list()
        self.expect("equal", "`=`")
        rhs = self.signed_int()
        self.expect("end", "end of input")
        return Equation(tuple(coeffs), rhs)

    def coefficient_list(self) -> list[int]:
        coeffs = [self.signed_int()]
        while self.accept("comma"):
            coeffs.append(self.signed_int())
        return coeffs

    def symbolic(self) -> list[int]:
        terms: dict[int, int] = {}
        sign = self._sign()
        while True:
            index, coeff = self.term()
            terms[index] = terms.get(index, 0) + sign * coeff
            op = self.accept("plus", "minus")
            if op is None:
                break
            sign = -1 if op.kind == "minus" else 1
        size = max(terms)
        return [terms.get(i, 0) for i in range(1, size + 1)]

    def term(self) -> tuple[int, int]:
        coeff = 1
        number = self.accept("int")
        if number is not None:
            coeff = int(number.value)
            self.accept("times")
        var = self.current
        if var.kind != "var":
            self.fail("a term such as `3x1`")
        if not 1 <= int(var.value) <= MAX_VARIABLE_INDEX:
            self.fail(f"a variable index between 1 and {MAX_VARIABLE_INDEX}")
        self.advance()
        return int(var.value), coeff


def parse_equation(text: str) -> Equation:
    """Parses an equation in coefficient or symbolic form.

    @type text: str
    @param text: For example C{"2x1 + 3x2 = 1"} or C{"2, 3 = 1"}.
    @rtype: L{Equation}
    @return: Equation with coefficients in variable-index order.
    @raises ParseError: With the offending position and what was expected.
    """
    return _Parser(text).parse()


def parse_vector(text: str) -> tuple[int, ...]:
    """Parses a comma-separated list of integers, as used by C{--params} and
    C{verify}. Surrounding parentheses or brackets are allowed.

    @raises ParseError: If an entry is not an integer.
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if stripped and stripped[0] in "([" and stripped[-1] in ")]":
        stripped = stripped[1:-1]
        offset += 1
    try:
        parser = _Parser(stripped)
        if parser.current.kind == "end":
            return ()
        values = parser.coefficient_list()
        parser.expect("end", "`,` or end of input")
    except ParseError as e:
        raise ParseError(text, e.position + offset, e.expected) from None
    return tuple(values)
