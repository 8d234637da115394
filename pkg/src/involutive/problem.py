"""Line-oriented problem files.

::

    # comment
    vars: x y z
    order: degrevlex
    completion_order: deglex
    x^2*y - z
    x*z - y

Header lines are ``key: value``; every other nonblank line is one polynomial
(or monomial) over the declared variables, greatest variable first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .monomials import Monomial, MonomialParseError, Order, VariableContext
from .polynomials import Polynomial, PolynomialParseError, PolynomialRing


class ProblemParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_KEYS = {"vars", "order", "completion_order"}


@dataclass
class Problem:
    variables: VariableContext
    order: Order = Order.DEGREVLEX
    completion_order: Optional[Order] = None
    lines: List[str] = field(default_factory=list)
    line_numbers: List[int] = field(default_factory=list)

    @property
    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.variables, self.order)

    def effective_completion_order(self) -> Order:
        return self.completion_order or self.order

    def polynomials(self) -> List[Polynomial]:
        ring = self.ring
        out = []
        for text, lineno in zip(self.lines, self.line_numbers):
            try:
                out.append(ring.parse(text))
            except PolynomialParseError as exc:
                raise ProblemParseError(str(exc).split(": ", 1)[1], lineno, exc.column) from None
        return out

    def monomials(self) -> List[Monomial]:
        out = []
        for text, lineno in zip(self.lines, self.line_numbers):
            try:
                out.append(self.variables.parse(text))
            except MonomialParseError as exc:
                raise ProblemParseError(str(exc).split(": ", 1)[1], lineno, exc.column) from None
        return out

    def render(self) -> str:
        head = [f"vars: {' '.join(self.variables.names)}", f"order: {self.order.value}"]
        if self.completion_order is not None:
            head.append(f"completion_order: {self.completion_order.value}")
        return "\n".join(head + list(self.lines)) + "\n"


def parse_problem(text: str) -> Problem:
    header = {}
    lines, numbers = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower().replace("-", "_")
        if sep and key in _KEYS:
            if lines:
                raise ProblemParseError(f"header {key!r} after the first polynomial", lineno)
            if key in header:
                raise ProblemParseError(f"duplicate header {key!r}", lineno)
            header[key] = (value.strip(), lineno, raw.index(":") + 2)
            continue
        if sep:
            raise ProblemParseError(f"unknown header {key!r}", lineno)
        lines.append(line.strip())
        numbers.append(lineno)

    if "vars" not in header:
        raise ProblemParseError("missing 'vars:' header", 1)
    value, lineno, col = header["vars"]
    try:
        variables = VariableContext(value.split())
    except ValueError as exc:
        raise ProblemParseError(str(exc), lineno, col) from None
    problem = Problem(variables, lines=lines, line_numbers=numbers)
    for key, attr in (("order", "order"), ("completion_order", "completion_order")):
        if key in header:
            value, lineno, col = header[key]
            try:
                setattr(problem, attr, Order.parse(value))
            except ValueError as exc:
                raise ProblemParseError(str(exc), lineno, col) from None
    return problem
