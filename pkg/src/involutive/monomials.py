"""Exponent-vector monomials, admissible orderings and divisibility.

A monomial is a plain tuple of nonnegative ints, one entry per variable of a
:class:`VariableContext`.  Position 0 is the greatest variable, so
``x1 > x2 > ... > xn`` holds for every ordering defined here.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

Monomial = Tuple[int, ...]

# Largest total degree accepted when building monomials from text or products.
MAX_DEGREE = 2**63 - 1


class ContextMismatch(ValueError):
    """Raised when monomials from different variable contexts are combined."""


class MonomialParseError(ValueError):
    def __init__(self, message: str, column: int = 0):
        super().__init__(f"column {column}: {message}")
        self.column = column


class Order(enum.Enum):
    """Admissible monomial orderings, all compatible with x1 > x2 > ... > xn."""

    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"

    def key(self, m: Monomial):
        """Sort key: ``a`` is greater than ``b`` iff ``key(a) > key(b)``."""
        if self is Order.LEX:
            return m
        if self is Order.DEGLEX:
            return (sum(m), m)
        # the larger monomial has the smaller exponent in the last differing slot
        return (sum(m), tuple(-e for e in reversed(m)))

    @classmethod
    def parse(cls, name: str) -> "Order":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown monomial ordering {name!r}") from None


def _check_same(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise ContextMismatch(f"monomials over {len(u)} and {len(v)} variables")


def compare(order: Order, u: Monomial, v: Monomial) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    _check_same(u, v)
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_same(u, v)
    return tuple(a if a >= b else b for a, b in zip(u, v))


def divides(u: Monomial, w: Monomial) -> bool:
    _check_same(u, w)
    return all(a <= b for a, b in zip(u, w))


def quotient(w: Monomial, u: Monomial) -> Monomial:
    """Return ``w / u``; ``u`` must divide ``w``."""
    _check_same(u, w)
    q = tuple(b - a for a, b in zip(u, w))
    if any(e < 0 for e in q):
        raise ValueError(f"{u} does not divide {w}")
    return q


def multiply(u: Monomial, v: Monomial) -> Monomial:
    _check_same(u, v)
    m = tuple(a + b for a, b in zip(u, v))
    if sum(m) > MAX_DEGREE:
        raise OverflowError("monomial degree exceeds the representable range")
    return m


def times_variable(u: Monomial, i: int) -> Monomial:
    """The prolongation ``u * x_i``."""
    return u[:i] + (u[i] + 1,) + u[i + 1:]


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(u) if e)


_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*")


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names; ``names[0]`` is the greatest variable."""

    names: Tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.names)

    def one(self) -> Monomial:
        return (0,) * self.n

    def variable(self, name_or_index) -> Monomial:
        i = self.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return times_variable(self.one(), i)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def monomial(self, exponents: Sequence[int]) -> Monomial:
        m = tuple(int(e) for e in exponents)
        if len(m) != self.n:
            raise ContextMismatch(f"expected {self.n} exponents, got {len(m)}")
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m}")
        if sum(m) > MAX_DEGREE:
            raise OverflowError("monomial degree exceeds the representable range")
        return m

    def render(self, m: Monomial) -> str:
        if len(m) != self.n:
            raise ContextMismatch(f"expected {self.n} exponents, got {len(m)}")
        parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(self.names, m) if e]
        return "*".join(parts) if parts else "1"

    def render_variables(self, indices: Iterable[int]) -> str:
        return ",".join(self.names[i] for i in sorted(indices)) or "-"

    def parse(self, text: str, offset: int = 0) -> Monomial:
        """Parse ``x^2*y`` style text; ``1`` is the unit monomial.

        ``offset`` shifts the column numbers reported in errors.
        """
        exps = [0] * self.n
        stripped = text.strip()
        if stripped == "1":
            return tuple(exps)
        if not stripped:
            raise MonomialParseError("empty monomial", offset + 1)
        pos = 0
        while True:
            match = _FACTOR.match(text, pos)
            if not match or match.end() == match.start():
                raise MonomialParseError(f"expected a variable in {text!r}", offset + pos + 1)
            name = match.group(1)
            if name not in self.names:
                raise MonomialParseError(f"unknown variable {name!r}", offset + match.start(1) + 1)
            exps[self.names.index(name)] += int(match.group(2) or 1)
            pos = match.end()
            if pos == len(text):
                break
            if text[pos] != "*":
                raise MonomialParseError(f"unexpected {text[pos]!r}", offset + pos + 1)
            pos += 1
        return self.monomial(exps)
