"""Involutive divisions as separations of variables.

Every division maps an element ``u`` of a finite monomial set ``U`` to a
partition of the variable indices into multiplicative and nonmultiplicative
ones.  All functions here are stateless; callers decide whether to rescan a
set or to update a separation incrementally with :func:`pairwise_update`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Collection, Iterable, Optional, Sequence

from .monomials import Monomial, Order


class Division(enum.Enum):
    THOMAS = "thomas"
    JANET = "janet"
    POMMARET = "pommaret"
    DIV1 = "div1"
    DIV2 = "div2"
    INDUCED_LEX = "induced-lex"
    INDUCED_DEGLEX = "induced-deglex"
    INDUCED_DEGREVLEX = "induced-degrevlex"

    @classmethod
    def induced(cls, order: Order) -> "Division":
        return {
            Order.LEX: cls.INDUCED_LEX,
            Order.DEGLEX: cls.INDUCED_DEGLEX,
            Order.DEGREVLEX: cls.INDUCED_DEGREVLEX,
        }[order]

    @classmethod
    def parse(cls, name: str) -> "Division":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(d.value for d in cls)
            raise ValueError(f"unknown division {name!r} (choose from {choices})") from None

    @property
    def inducing_order(self) -> Optional[Order]:
        return _INDUCING.get(self)

    @property
    def globally_defined(self) -> bool:
        return self in (Division.POMMARET, Division.DIV2)

    @property
    def short_name(self) -> str:
        return _SHORT[self]


_INDUCING = {
    Division.INDUCED_LEX: Order.LEX,
    Division.INDUCED_DEGLEX: Order.DEGLEX,
    Division.INDUCED_DEGREVLEX: Order.DEGREVLEX,
}

_SHORT = {
    Division.THOMAS: "T",
    Division.JANET: "J",
    Division.POMMARET: "P",
    Division.DIV1: "I",
    Division.DIV2: "II",
    Division.INDUCED_LEX: "D_L",
    Division.INDUCED_DEGLEX: "D_DL",
    Division.INDUCED_DEGREVLEX: "D_DRL",
}


@dataclass(frozen=True)
class Separation:
    multiplicative: frozenset
    nonmultiplicative: frozenset


class NotInSet(ValueError):
    """The monomial whose separation was requested is not an element of the set."""


def _thomas(u: Monomial, U: Iterable[Monomial]) -> frozenset:
    nm = set()
    for v in U:
        for i, (a, b) in enumerate(zip(u, v)):
            if b > a:
                nm.add(i)
    return frozenset(nm)


def _janet(u: Monomial, U: Iterable[Monomial]) -> frozenset:
    group = list(U)
    nm = []
    for i, d in enumerate(u):
        if any(v[i] > d for v in group):
            nm.append(i)
        group = [v for v in group if v[i] == d]
    return frozenset(nm)


def _pommaret(u: Monomial) -> frozenset:
    k = max((i for i, e in enumerate(u) if e), default=0)
    return frozenset(range(k))


def _div1(u: Monomial, U: Iterable[Monomial]) -> frozenset:
    bound = len(u) // 2
    nm = set()
    for v in U:
        # variables of lcm(u, v) / u
        extra = [i for i, (a, b) in enumerate(zip(u, v)) if b > a]
        if 1 <= len(extra) <= bound:
            nm.update(extra)
    return frozenset(nm)


def _div2(u: Monomial) -> frozenset:
    top = max(u)
    return frozenset(i for i, e in enumerate(u) if e != top)


def _induced(order: Order, u: Monomial, U: Iterable[Monomial]) -> frozenset:
    ku = order.key(u)
    nm = set()
    for v in U:
        if order.key(v) < ku:
            nm.update(i for i, (a, b) in enumerate(zip(u, v)) if b > a)
    return frozenset(nm)


def nonmultiplicative(division: Division, u: Monomial, U: Iterable[Monomial]) -> frozenset:
    """Nonmultiplicative variable indices of ``u`` with respect to ``U``.

    Membership of ``u`` in ``U`` is not checked here; use :func:`separation`
    for the checked variant.
    """
    if division is Division.JANET:
        return _janet(u, U)
    if division is Division.THOMAS:
        return _thomas(u, U)
    if division is Division.POMMARET:
        return _pommaret(u)
    if division is Division.DIV2:
        return _div2(u)
    if division is Division.DIV1:
        return _div1(u, U)
    return _induced(division.inducing_order, u, U)


def separation(division: Division, u: Monomial, U: Collection[Monomial]) -> Separation:
    if u not in U:
        raise NotInSet(f"{u} is not an element of the monomial set")
    nm = nonmultiplicative(division, u, U)
    return Separation(frozenset(range(len(u))) - nm, nm)


def pairwise_update(division: Division, u: Monomial, nm_current: frozenset,
                    v: Monomial) -> frozenset:
    """Nonmultiplicative variables of ``u`` after adding ``v`` to the set."""
    return nm_current | nonmultiplicative(division, u, (u, v))


def divides_with(nm: Collection[int], u: Monomial, w: Monomial) -> bool:
    """True iff ``u`` divides ``w`` with a quotient free of the variables ``nm``."""
    for i, (a, b) in enumerate(zip(u, w)):
        if b < a or (b != a and i in nm):
            return False
    return True


def involutive_divides(division: Division, u: Monomial, U: Collection[Monomial],
                       w: Monomial) -> bool:
    return divides_with(separation(division, u, U).nonmultiplicative, u, w)


def find_involutive_divisor(division: Division, U: Sequence[Monomial],
                            w: Monomial) -> Optional[Monomial]:
    """First element of ``U`` (in iteration order) that involutively divides ``w``."""
    for u in U:
        if divides_with(nonmultiplicative(division, u, U), u, w):
            return u
    return None


def separations(division: Division, U: Sequence[Monomial]) -> dict:
    """Nonmultiplicative sets for every element of ``U`` by full rescan."""
    return {u: nonmultiplicative(division, u, U) for u in U}
