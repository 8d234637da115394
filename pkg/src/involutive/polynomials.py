"""Sparse polynomials over the rationals, normal forms and a Buchberger oracle."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .completion import CompletionLimitExceeded, CompletionLimits
from .divisions import Division, divides_with, separations
from .monomials import (ContextMismatch, Monomial, Order, VariableContext, divides, lcm,
                        quotient, times_variable)


class PolynomialParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class PolynomialRing:
    """``Q[x1, ..., xn]`` with a fixed main ordering."""

    context: VariableContext
    order: Order = Order.DEGREVLEX

    @property
    def n(self) -> int:
        return self.context.n

    def key(self, m: Monomial):
        return self.order.key(m)

    def from_dict(self, terms: Mapping[Monomial, object]) -> "Polynomial":
        clean = {}
        for m, c in terms.items():
            if len(m) != self.n:
                raise ContextMismatch(f"monomial {m} does not fit {self.n} variables")
            c = Fraction(c)
            if c:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.monomial(self.context.one())

    def monomial(self, m: Monomial, coeff=1) -> "Polynomial":
        return self.from_dict({m: coeff})

    def variable(self, i) -> "Polynomial":
        return self.monomial(self.context.variable(i))

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def render(self, p: "Polynomial") -> str:
        return str(p)

    def with_order(self, order: Order) -> "PolynomialRing":
        return PolynomialRing(self.context, order)


class Polynomial:
    """A sparse polynomial; ``terms`` maps monomials to nonzero Fractions.

    Instances are treated as immutable.
    """

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolynomialRing, terms: Dict[Monomial, Fraction]):
        self.ring = ring
        self.terms = terms
        self._lm = None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        ctx = self.ring.context
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = ctx.render(m)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending main ordering."""
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    @property
    def lm(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    @property
    def lc(self) -> Fraction:
        return self.terms[self.lm]

    @property
    def lt(self) -> Tuple[Fraction, Monomial]:
        return self.lc, self.lm

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ContextMismatch("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.monomial(self.ring.context.one(), other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.monomial(self.ring.context.one(), other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def mul_term(self, coeff, m: Monomial) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring, {
            tuple(a + b for a, b in zip(k, m)): c * coeff for k, c in self.terms.items()})

    def mul_variable(self, i: int) -> "Polynomial":
        return Polynomial(self.ring, {times_variable(k, i): c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.mul_term(other, self.ring.context.one())
        self._check(other)
        result = self.ring.zero()
        for m, c in other.terms.items():
            result = result + self.mul_term(c, m)
        return result

    __rmul__ = __mul__

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lc
        if lc == 1:
            return self
        return Polynomial(self.ring, {m: c / lc for m, c in self.terms.items()})


# -- reduction ---------------------------------------------------------------

Finder = Callable[[Monomial], Optional["Polynomial"]]


def reduce_full(p: Polynomial, find: Finder) -> Polynomial:
    """Fully reduce ``p``, always rewriting the highest reducible term first.

    ``find(m)`` returns a polynomial whose leading monomial divides ``m`` in
    the sense the caller wants, or None when ``m`` is irreducible.
    """
    key = p.ring.key
    work = dict(p.terms)
    remainder = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        f = find(m)
        if f is None:
            remainder[m] = c
            continue
        q = quotient(m, f.lm)
        factor = c / f.lc
        flm = f.lm
        for fm, fc in f.terms.items():
            if fm == flm:
                continue
            t = tuple(a + b for a, b in zip(fm, q))
            v = work.get(t, 0) - factor * fc
            if v:
                work[t] = v
            else:
                work.pop(t, None)
    return Polynomial(p.ring, remainder)


def conventional_finder(F: Sequence[Polynomial]) -> Finder:
    pairs = [(f.lm, f) for f in F if f]

    def find(m):
        for lm, f in pairs:
            if divides(lm, m):
                return f
        return None

    return find


def involutive_finder(F: Sequence[Polynomial], nm: Mapping[Monomial, frozenset]) -> Finder:
    """Finder over ``F`` given nonmultiplicative sets keyed by leading monomial."""
    pairs = [(f.lm, nm[f.lm], f) for f in F]

    def find(m):
        for lm, bad, f in pairs:
            if divides_with(bad, lm, m):
                return f
        return None

    return find


def leading_separations(F: Sequence[Polynomial], division: Division) -> dict:
    lms = list(dict.fromkeys(f.lm for f in F))
    return separations(division, lms)


def nf_conventional(p: Polynomial, F: Sequence[Polynomial]) -> Polynomial:
    return reduce_full(p, conventional_finder(F))


def nf_involutive(p: Polynomial, F: Sequence[Polynomial], division: Division) -> Polynomial:
    """Involutive normal form; separations are taken on the leading monomials of ``F``."""
    F = [f for f in F if f]
    return reduce_full(p, involutive_finder(F, leading_separations(F, division)))


def is_involutively_autoreduced(F: Sequence[Polynomial], division: Division) -> bool:
    """No term of any element is an involutive multiple of another leading monomial."""
    lms = [f.lm for f in F]
    if len(set(lms)) != len(lms):
        return False
    nm = separations(division, lms)
    for f in F:
        for m in f.terms:
            for v in lms:
                if v == f.lm and m == v:
                    continue
                if divides_with(nm[v], v, m):
                    return False
    return True


def autoreduce(F: Iterable[Polynomial]) -> List[Polynomial]:
    """Conventionally interreduce ``F``; the result is monic and sorted by leading monomial."""
    G = [f.monic() for f in F if f]
    changed = True
    while changed:
        changed = False
        for i in range(len(G)):
            f = G[i]
            others = G[:i] + G[i + 1:]
            h = nf_conventional(f, others)
            if h != f:
                del G[i]
                if h:
                    G.append(h.monic())
                changed = True
                break
    return sort_basis(G)


def sort_basis(G: Iterable[Polynomial]) -> List[Polynomial]:
    G = list(G)
    if not G:
        return G
    key = G[0].ring.key
    return sorted(G, key=lambda g: key(g.lm))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    f._check(g)
    L = lcm(f.lm, g.lm)
    return f.mul_term(1 / f.lc, quotient(L, f.lm)) - g.mul_term(1 / g.lc, quotient(L, g.lm))


def s_polynomial_involutive(g: Polynomial, x: int, f: Polynomial, w: Monomial) -> Polynomial:
    """``g*x - f*w``, both sides scaled to a unit leading coefficient.

    Requires ``lm(f) * w == lm(g) * x``; that ``w`` is multiplicative for
    ``lm(f)`` is the caller's responsibility.
    """
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    f._check(g)
    if tuple(a + b for a, b in zip(f.lm, w)) != times_variable(g.lm, x):
        raise ValueError("lm(f)*w must equal lm(g)*x")
    return g.mul_variable(x).mul_term(1 / g.lc, g.ring.context.one()) - f.mul_term(1 / f.lc, w)


@dataclass
class GroebnerStats:
    pairs_considered: int = 0
    coprime_skipped: int = 0
    reductions_to_zero: int = 0


def buchberger(F: Iterable[Polynomial], limits: CompletionLimits = CompletionLimits(),
               stats: Optional[GroebnerStats] = None) -> List[Polynomial]:
    """Reduced Groebner basis of ``Id(F)``; normal selection, coprime criterion only."""
    stats = stats if stats is not None else GroebnerStats()
    G = autoreduce(F)
    if not G:
        return G
    key = G[0].ring.key
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda p: (key(lcm(G[p[0]].lm, G[p[1]].lm)), p))
        pairs.discard((i, j))
        stats.pairs_considered += 1
        if stats.pairs_considered > limits.max_iterations:
            raise CompletionLimitExceeded("Buchberger pair limit reached", G, stats)
        f, g = G[i], G[j]
        if all(a == 0 or b == 0 for a, b in zip(f.lm, g.lm)):
            stats.coprime_skipped += 1
            continue
        h = nf_conventional(s_polynomial(f, g), G)
        if not h:
            stats.reductions_to_zero += 1
            continue
        if sum(h.lm) > limits.max_degree:
            raise CompletionLimitExceeded("Buchberger degree limit reached", G, stats)
        G.append(h.monic())
        k = len(G) - 1
        pairs.update((m, k) for m in range(k))
    # minimalize, then interreduce
    minimal = []
    for g in sort_basis(G):
        if not any(divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    return autoreduce(minimal)


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, ring: PolynomialRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if match is None:
                break  # trailing whitespace
            for kind, group in (("num", 1), ("name", 2), ("op", 3)):
                if match.group(group) is not None:
                    self.tokens.append((kind, match.group(group), match.start(group) + 1))
            pos = match.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text) + 1)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _fail(self, message, tok=None):
        tok = tok or self._peek()
        raise PolynomialParseError(message, tok[2])

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._fail("empty polynomial")
        terms: Dict[Monomial, Fraction] = {}
        sign = 1
        kind, value, _ = self._peek()
        if kind == "op" and value in "+-":
            self._next()
            sign = -1 if value == "-" else 1
        while True:
            coeff, mono = self._term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            kind, value, _ = self._peek()
            if kind == "end":
                break
            if kind == "op" and value in "+-":
                self._next()
                sign = -1 if value == "-" else 1
                continue
            self._fail(f"unexpected {value!r} (implicit multiplication is not allowed)")
        return self.ring.from_dict(terms)

    def _term(self):
        coeff = Fraction(1)
        exps = [0] * self.ring.n
        while True:
            tok = self._next()
            kind, value, _ = tok
            if kind == "num":
                num = int(value)
                if self._peek()[:2] == ("op", "/"):
                    self._next()
                    den_tok = self._next()
                    if den_tok[0] != "num":
                        self._fail("expected a denominator", den_tok)
                    if int(den_tok[1]) == 0:
                        self._fail("division by zero", den_tok)
                    coeff *= Fraction(num, int(den_tok[1]))
                else:
                    coeff *= num
            elif kind == "name":
                if value not in self.ring.context.names:
                    self._fail(f"unknown variable {value!r}", tok)
                power = 1
                if self._peek()[:2] == ("op", "^"):
                    self._next()
                    exp_tok = self._next()
                    if exp_tok[0] != "num":
                        self._fail("expected an integer exponent", exp_tok)
                    power = int(exp_tok[1])
                exps[self.ring.context.index(value)] += power
            else:
                self._fail(f"expected a number or variable, got {value!r}" if value else
                           "unexpected end of input", tok)
            if self._peek()[:2] == ("op", "*"):
                self._next()
                continue
            return coeff, tuple(exps)
