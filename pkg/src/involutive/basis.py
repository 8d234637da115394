"""Minimal involutive bases of polynomial ideals.

:func:`minimal_involutive_basis` keeps two triple lists: ``T``, whose
polynomials form the current basis ``G``, and the queue ``Q``.  Every triple
carries its polynomial, the ancestor monomial it descends from and the
nonmultiplicative variables already prolonged.  The chain criterion uses the
ancestors to drop prolongations whose S-polynomial is known to reduce to 0.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .completion import CompletionLimitExceeded, CompletionLimits
from .divisions import Division, divides_with, nonmultiplicative, pairwise_update, separations
from .monomials import Monomial, Order, lcm, times_variable
from .polynomials import (Polynomial, autoreduce, involutive_finder, is_involutively_autoreduced,
                          nf_involutive, reduce_full, sort_basis)


@dataclass
class Triple:
    poly: Polynomial
    ancestor: Monomial
    processed: frozenset
    serial: int

    @property
    def lm(self) -> Monomial:
        return self.poly.lm


@dataclass
class BasisStats:
    queue_pops: int = 0
    prolongations_examined: int = 0
    criterion_hits: int = 0
    normal_forms: int = 0
    insertions: int = 0
    displacements: int = 0

    def as_block(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in vars(self).items())


def criterion(lm_g: Monomial, ancestor: Monomial, T: Sequence[Triple], nm: dict,
              completion_order: Order) -> bool:
    """True when the polynomial with leading monomial ``lm_g`` may be discarded.

    Holds if some ``(f, v, D)`` in ``T`` has ``lm(f)`` as involutive divisor
    of ``lm_g`` and ``lcm(ancestor, v)`` is strictly below ``lm_g`` in the
    completion ordering.  ``nm`` maps each leading monomial of ``T`` to its
    nonmultiplicative variables.
    """
    key = completion_order.key
    bound = key(lm_g)
    for t in T:
        if divides_with(nm[t.lm], t.lm, lm_g) and key(lcm(ancestor, t.ancestor)) < bound:
            return True
    return False


class _BasisRun:
    def __init__(self, division: Division, main_order: Order, completion_order: Order,
                 limits: CompletionLimits, use_criterion: bool, cross_check: bool):
        self.division = division
        self.main_key = main_order.key
        self.completion_order = completion_order
        self.limits = limits
        self.use_criterion = use_criterion
        self.cross_check = cross_check
        self.stats = BasisStats()
        self.T: List[Triple] = []
        self.Q: List[Triple] = []
        self.nm = {}
        self._serial = itertools.count()

    def triple(self, poly, ancestor, processed=frozenset()) -> Triple:
        return Triple(poly, ancestor, frozenset(processed), next(self._serial))

    def _tick(self) -> None:
        s = self.stats
        if s.queue_pops + s.prolongations_examined > self.limits.max_iterations:
            raise CompletionLimitExceeded(
                f"more than {self.limits.max_iterations} iterations", self.basis(), s)

    def _rescan(self) -> None:
        self.nm = separations(self.division, [t.lm for t in self.T])

    def _discard(self, lm_g: Monomial, ancestor: Monomial) -> bool:
        if not self.use_criterion:
            return False
        hit = criterion(lm_g, ancestor, self.T, self.nm, self.completion_order)
        self.stats.criterion_hits += hit
        return hit

    def _normal_form(self, p: Polynomial) -> Polynomial:
        self.stats.normal_forms += 1
        G = [t.poly for t in self.T]
        return reduce_full(p, involutive_finder(G, self.nm))

    def insert(self, h: Polynomial, ancestor: Monomial, processed: frozenset) -> None:
        if sum(h.lm) > self.limits.max_degree:
            raise CompletionLimitExceeded(
                f"leading monomial degree {sum(h.lm)} exceeds max_degree={self.limits.max_degree}",
                self.basis(), self.stats)
        self.stats.insertions += 1
        e = h.lm
        for t in self.T:
            self.nm[t.lm] = pairwise_update(self.division, t.lm, self.nm[t.lm], e)
        self.T.append(self.triple(h, ancestor, processed))
        self.nm[e] = nonmultiplicative(self.division, e, [t.lm for t in self.T])

        key = self.main_key
        displaced = [t for t in self.T if key(t.lm) > key(e)]
        if displaced:
            self.stats.displacements += len(displaced)
            self.T = [t for t in self.T if key(t.lm) <= key(e)]
            self.Q.extend(displaced)
            self._rescan()
        elif self.cross_check:
            assert self.nm == separations(self.division, [t.lm for t in self.T])
        for t in self.T:
            t.processed = t.processed & self.nm[t.lm]

    def _pop_queue(self) -> Triple:
        key = self.main_key
        t = min(self.Q, key=lambda t: (key(t.lm), t.serial))
        self.Q.remove(t)
        self.stats.queue_pops += 1
        self._tick()
        return t

    def _next_prolongation(self) -> Optional[Tuple[Triple, int]]:
        key = self.main_key
        ckey = self.completion_order.key
        gate = min((key(t.lm) for t in self.Q), default=None)
        best = None
        for t in self.T:
            for x in sorted(self.nm[t.lm] - t.processed):
                w = times_variable(t.lm, x)
                if gate is not None and not key(w) < gate:
                    continue
                rank = (ckey(w), t.serial, x)
                if best is None or rank < best[0]:
                    best = (rank, t, x)
        return None if best is None else (best[1], best[2])

    def run(self, F: List[Polynomial]) -> List[Polynomial]:
        key = self.main_key
        F = sorted(F, key=lambda f: key(f.lm))
        g = F[0]
        self.T = [self.triple(g, g.lm)]
        self.nm = {g.lm: nonmultiplicative(self.division, g.lm, [g.lm])}
        self.Q = [self.triple(f, f.lm) for f in F[1:]]

        while True:
            h = None
            while self.Q and h is None:
                t = self._pop_queue()
                if not self._discard(t.lm, t.ancestor):
                    nf = self._normal_form(t.poly)
                    if nf:
                        h = nf.monic()
            if h is not None:
                if h.lm == t.lm:
                    self.insert(h, t.ancestor, t.processed)
                else:
                    self.insert(h, h.lm, frozenset())

            while True:
                found = self._next_prolongation()
                if found is None:
                    break
                t, x = found
                t.processed = t.processed | {x}
                self.stats.prolongations_examined += 1
                self._tick()
                w = times_variable(t.lm, x)
                if self._discard(w, t.ancestor):
                    continue
                nf = self._normal_form(t.poly.mul_variable(x))
                if nf:
                    h = nf.monic()
                    if h.lm == w:
                        self.insert(h, t.ancestor, frozenset())
                    else:
                        self.insert(h, h.lm, frozenset())

            if not self.Q:
                break
        return self.finish()

    def basis(self) -> List[Polynomial]:
        return sort_basis(t.poly for t in self.T)

    def finish(self) -> List[Polynomial]:
        """Involutively reduce every tail and normalize to monic form."""
        G = [t.poly for t in self.T]
        find = involutive_finder(G, self.nm)
        out = []
        for g in G:
            lead = g.ring.monomial(g.lm, g.lc)
            out.append((lead + reduce_full(g - lead, find)).monic())
        return sort_basis(out)


def minimal_involutive_basis(F: Iterable[Polynomial], division: Division,
                             main_order: Optional[Order] = None,
                             completion_order: Optional[Order] = None,
                             limits: CompletionLimits = CompletionLimits(),
                             autoreduce_input: bool = True,
                             use_criterion: bool = True,
                             cross_check: bool = False) -> Tuple[List[Polynomial], BasisStats]:
    """Compute the monic minimal involutive basis of ``Id(F)``.

    ``main_order`` defaults to the ring's ordering (the polynomials are
    re-read in another ring if it differs); ``completion_order`` defaults to
    the main ordering.  The result is sorted ascending by leading monomial.
    """
    F = list(F)
    if not F:
        raise ValueError("empty input")
    if any(not f for f in F):
        raise ValueError("zero polynomial in input")
    ring = F[0].ring
    if main_order is not None and main_order != ring.order:
        ring = ring.with_order(main_order)
        F = [ring.from_dict(f.terms) for f in F]
    main_order = ring.order
    completion_order = completion_order or main_order
    if division is Division.POMMARET and main_order is Order.LEX:
        warnings.warn("Pommaret division is not noetherian; with a lex main ordering "
                      "termination is not guaranteed even for finite bases", stacklevel=2)
    F = autoreduce(F) if autoreduce_input else [f.monic() for f in F]
    if not F:
        raise ValueError("input generates the zero ideal")
    run = _BasisRun(division, main_order, completion_order, limits, use_criterion, cross_check)
    return run.run(F), run.stats


def is_involutive_basis(G: Sequence[Polynomial], division: Division) -> bool:
    """L-autoreduced and every nonmultiplicative prolongation reduces to zero."""
    G = [g for g in G if g]
    if not G or not is_involutively_autoreduced(G, division):
        return False
    nm = separations(division, [g.lm for g in G])
    find = involutive_finder(G, nm)
    return all(not reduce_full(g.mul_variable(x), find) for g in G for x in nm[g.lm])
