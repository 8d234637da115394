"""Seeded random inputs and standard benchmark systems."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List

from .monomials import Monomial, VariableContext
from .polynomials import Polynomial, PolynomialRing


def random_monomial(rng: random.Random, n: int, max_degree: int, min_degree: int = 1) -> Monomial:
    d = rng.randint(min_degree, max_degree)
    exps = [0] * n
    for _ in range(d):
        exps[rng.randrange(n)] += 1
    return tuple(exps)


def random_monomial_set(rng: random.Random, max_vars: int = 4, max_degree: int = 5,
                        max_generators: int = 6) -> List[Monomial]:
    n = rng.randint(1, max_vars)
    k = rng.randint(1, max_generators)
    return list(dict.fromkeys(random_monomial(rng, n, max_degree) for _ in range(k)))


def monomial_corpus(seed: int, count: int, **kwargs) -> List[List[Monomial]]:
    rng = random.Random(seed)
    return [random_monomial_set(rng, **kwargs) for _ in range(count)]


def random_coefficient(rng: random.Random) -> Fraction:
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return c if c else Fraction(1)


def random_polynomial(rng: random.Random, ring: PolynomialRing, max_degree: int = 3,
                      max_terms: int = 4) -> Polynomial:
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            m = random_monomial(rng, ring.n, max_degree, min_degree=0)
            terms[m] = terms.get(m, 0) + random_coefficient(rng)
        p = ring.from_dict(terms)
        if p:
            return p


def random_system(rng: random.Random, ring: PolynomialRing, generators: int = 3,
                  max_degree: int = 3, max_terms: int = 4) -> List[Polynomial]:
    return [random_polynomial(rng, ring, max_degree, max_terms) for _ in range(generators)]


def polynomial_corpus(seed: int, count: int, ring: PolynomialRing, **kwargs) -> List[List[Polynomial]]:
    rng = random.Random(seed)
    return [random_system(rng, ring, **kwargs) for _ in range(count)]


def cyclic(ring: PolynomialRing) -> List[Polynomial]:
    """The cyclic-n roots system in the ring's n variables."""
    n = ring.n
    xs = [ring.variable(i) for i in range(n)]
    system = []
    for length in range(1, n):
        total = ring.zero()
        for start in range(n):
            term = ring.one()
            for j in range(length):
                term = term * xs[(start + j) % n]
            total = total + term
        system.append(total)
    prod = ring.one()
    for x in xs:
        prod = prod * x
    system.append(prod - ring.one())
    return system


def katsura(ring: PolynomialRing) -> List[Polynomial]:
    """The katsura-(n-1) system in the ring's n variables ``u0 .. u_{n-1}``."""
    n = ring.n - 1
    u = [ring.variable(i) for i in range(n + 1)]

    def var(k):
        k = abs(k)
        return u[k] if k <= n else ring.zero()

    system = []
    for m in range(n):
        total = ring.zero()
        for l in range(-n, n + 1):
            total = total + var(l) * var(m - l)
        system.append(total - u[m])
    linear = u[0]
    for l in range(1, n + 1):
        linear = linear + u[l] * 2
    system.append(linear - ring.one())
    return system


def benchmark(name: str, order) -> tuple:
    """Return ``(ring, system)`` for ``cyclic-N`` or ``katsura-N``."""
    family, _, size = name.partition("-")
    size = int(size)
    if family == "cyclic":
        ring = PolynomialRing(VariableContext(f"x{i}" for i in range(1, size + 1)), order)
        return ring, cyclic(ring)
    if family == "katsura":
        ring = PolynomialRing(VariableContext(f"u{i}" for i in range(size + 1)), order)
        return ring, katsura(ring)
    raise ValueError(f"unknown benchmark {name!r}")
