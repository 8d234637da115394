"""Completion of finite monomial sets to involution.

:func:`involutive_complete` runs the normal-strategy completion: repeatedly
insert the lowest (under the completion ordering) nonmultiplicative
prolongation that has no involutive divisor in the current set.  The module
also holds the predicates used to check completions independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .divisions import (Division, divides_with, nonmultiplicative, pairwise_update,
                        separations)
from .monomials import Monomial, Order, divides, times_variable


@dataclass(frozen=True)
class CompletionLimits:
    max_degree: int = 50
    max_iterations: int = 100_000

    def __post_init__(self):
        if self.max_degree <= 0 or self.max_iterations <= 0:
            raise ValueError("completion limits must be positive")


@dataclass
class CompletionStats:
    """Counters of one completion run.

    ``prolongations_checked`` counts distinct pairs ``(u, x)`` with ``x``
    nonmultiplicative for ``u`` whose product was tested for an involutive
    divisor; a pair re-tested after the set grew is counted once.
    """

    prolongations_checked: int = 0
    elements_added: int = 0
    final_size: int = 0

    def as_block(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in vars(self).items())


class CompletionLimitExceeded(RuntimeError):
    """The completion hit a degree or iteration cap.

    Usually means the division is not noetherian for the input, e.g. Pommaret
    division on a positive-dimensional monomial ideal.
    """

    def __init__(self, message: str, partial: List[Monomial], stats: CompletionStats):
        super().__init__(message)
        self.partial = partial
        self.stats = stats


class _Completion:
    """Mutable state of one completion run.

    Each pending prolongation ``(u, x)`` remembers the element that currently
    divides ``u * x`` involutively (or None).  When the set grows, multiplicative
    sets only shrink, so a pair needs a full rescan only if its witness lost
    multiplicative variables; an irreducible pair can only be divided by the
    newly inserted element.
    """

    def __init__(self, U: Iterable[Monomial], division: Division, order: Order,
                 limits: CompletionLimits, monotone: bool = False, cross_check: bool = False):
        self.division = division
        self.order = order
        self.limits = limits
        self.monotone = monotone
        self.cross_check = cross_check
        self.stats = CompletionStats()
        self.elements: List[Monomial] = []
        for u in U:
            if u not in self.elements:
                self.elements.append(u)
        if not self.elements:
            raise ValueError("cannot complete an empty monomial set")
        self.nm = separations(division, self.elements)
        self.witness = {}
        self.by_witness = {}
        self.irreducible = set()
        self.bound = None
        for u in self.elements:
            for x in sorted(self.nm[u]):
                self._new_pair(u, x)

    def _below_bound(self, w: Monomial) -> bool:
        return self.monotone and self.bound is not None and self.order.key(w) <= self.bound

    def _find(self, w: Monomial) -> Optional[Monomial]:
        nm = self.nm
        for v in self.elements:
            if divides_with(nm[v], v, w):
                return v
        return None

    def _assign(self, pair, w: Monomial) -> None:
        v = self._find(w)
        self.witness[pair] = v
        if v is None:
            self.irreducible.add(pair)
        else:
            self.irreducible.discard(pair)
            self.by_witness.setdefault(v, set()).add(pair)

    def _new_pair(self, u: Monomial, x: int) -> None:
        pair = (u, x)
        w = times_variable(u, x)
        if self._below_bound(w):
            return
        self.stats.prolongations_checked += 1
        if self.stats.prolongations_checked > self.limits.max_iterations:
            raise CompletionLimitExceeded(
                f"more than {self.limits.max_iterations} prolongations checked",
                self.result(), self.stats)
        self._assign(pair, w)

    def _pick(self) -> Tuple[Monomial, int]:
        key = self.order.key
        return min(self.irreducible,
                   key=lambda p: (key(times_variable(*p)), key(p[0]), p[1]))

    def _insert(self, e: Monomial) -> None:
        changed = []
        grown = []
        for u in self.elements:
            new = pairwise_update(self.division, u, self.nm[u], e)
            if new != self.nm[u]:
                changed.append(u)
                grown.append((u, new - self.nm[u]))
                self.nm[u] = new
        self.elements.append(e)
        self.nm[e] = nonmultiplicative(self.division, e, self.elements)
        if self.cross_check:
            assert self.nm == separations(self.division, self.elements), "pairwise update drifted"

        for pair in list(self.irreducible):
            w = times_variable(*pair)
            if self._below_bound(w):
                self.irreducible.discard(pair)
            elif divides_with(self.nm[e], e, w):
                self.irreducible.discard(pair)
                self.witness[pair] = e
                self.by_witness.setdefault(e, set()).add(pair)
        for v in changed:
            for pair in self.by_witness.pop(v, ()):
                w = times_variable(*pair)
                if not self._below_bound(w):
                    self._assign(pair, w)
        for u, xs in grown:
            for x in sorted(xs):
                self._new_pair(u, x)
        for x in sorted(self.nm[e]):
            self._new_pair(e, x)

    def run(self) -> List[Monomial]:
        while self.irreducible:
            u, x = self._pick()
            w = times_variable(u, x)
            if sum(w) > self.limits.max_degree:
                raise CompletionLimitExceeded(
                    f"prolongation of degree {sum(w)} exceeds max_degree={self.limits.max_degree}",
                    self.result(), self.stats)
            self.stats.elements_added += 1
            if self.monotone:
                self.bound = self.order.key(w)
            self._insert(w)
        return self.result()

    def result(self) -> List[Monomial]:
        self.stats.final_size = len(self.elements)
        return sorted(self.elements, key=self.order.key)


def involutive_complete(U: Iterable[Monomial], division: Division,
                        completion_order: Order = Order.DEGLEX,
                        limits: CompletionLimits = CompletionLimits(),
                        monotone: bool = False,
                        cross_check: bool = False) -> Tuple[List[Monomial], CompletionStats]:
    """Complete ``U`` to an involutive set under the normal selection strategy.

    Returns the completed set sorted ascending under ``completion_order`` and
    the run statistics.  With ``monotone=True`` prolongations not above the
    last inserted element are never re-examined; this is only valid when the
    division is monotone for ``completion_order`` (Thomas with any ordering,
    Janet with lex, an induced division with its own ordering).
    ``cross_check`` verifies every incremental separation update against a
    full rescan.

    Raises :class:`CompletionLimitExceeded` when a cap in ``limits`` is hit.
    """
    run = _Completion(U, division, completion_order, limits, monotone, cross_check)
    result = run.run()
    return result, run.stats


def lowest_irreducible_prolongation(U: Sequence[Monomial], division: Division,
                                    order: Order) -> Optional[Monomial]:
    """The lowest nonmultiplicative prolongation of ``U`` outside its involutive cone."""
    nm = separations(division, U)
    found = [times_variable(u, x) for u in U for x in nm[u]]
    found = [w for w in found if not any(divides_with(nm[v], v, w) for v in U)]
    return min(found, key=order.key, default=None)


def is_locally_involutive(U: Sequence[Monomial], division: Division) -> bool:
    U = list(dict.fromkeys(U))
    nm = separations(division, U)
    return all(
        any(divides_with(nm[v], v, times_variable(u, x)) for v in U)
        for u in U for x in nm[u]
    )


def _monomials_up_to(n: int, degree: int) -> Iterator[Monomial]:
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), d):
            m = [0] * n
            for i in combo:
                m[i] += 1
            yield tuple(m)


def is_involutive_bruteforce(U: Sequence[Monomial], division: Division,
                             degree_bound: int) -> bool:
    """Check that the cone and the involutive cone of ``U`` agree up to a degree.

    Both cones are enumerated explicitly, monomial by monomial.
    """
    U = list(dict.fromkeys(U))
    if not U:
        return True
    if degree_bound < max(sum(u) for u in U):
        raise ValueError("degree_bound is below the degree of an element")
    n = len(U[0])
    nm = separations(division, U)
    cone = set()
    involutive_cone = set()
    for u in U:
        for m in _monomials_up_to(n, degree_bound - sum(u)):
            w = tuple(a + b for a, b in zip(u, m))
            cone.add(w)
            if all(m[i] == 0 for i in nm[u]):
                involutive_cone.add(w)
    return cone == involutive_cone


def is_autoreduced_involutively(U: Sequence[Monomial], division: Division) -> bool:
    U = list(dict.fromkeys(U))
    nm = separations(division, U)
    for u, v in itertools.combinations(U, 2):
        if divides_with(nm[u], u, v) or divides_with(nm[v], v, u):
            return False
    return True


def completeness_bound_check(U: Sequence[Monomial], division: Division, order: Order,
                             w: Monomial) -> bool:
    """True iff every nonmultiplicative prolongation not above ``w`` lies in the involutive cone."""
    U = list(dict.fromkeys(U))
    nm = separations(division, U)
    bound = order.key(w)
    for u in U:
        for x in nm[u]:
            p = times_variable(u, x)
            if order.key(p) <= bound and not any(divides_with(nm[v], v, p) for v in U):
                return False
    return True


def minimal_generators(U: Iterable[Monomial]) -> List[Monomial]:
    """Conventional autoreduction of a monomial set."""
    U = list(dict.fromkeys(U))
    return [u for u in U if not any(v != u and divides(v, u) for v in U)]
