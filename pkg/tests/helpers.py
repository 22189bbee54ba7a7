"""Shared builders for randomized and sweep-style checks."""

import random
from fractions import Fraction

from detring.poly import Poly


def parameter_triples(max_m=3, max_n=3, proper=False):
    """All (m, n, r) with m <= max_m, n <= max_n and 1 <= r <= min(m, n).

    With proper=True the rank is restricted to r < min(m, n), the range on
    which the power classification is defined.
    """
    out = []
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            top = min(m, n) - 1 if proper else min(m, n)
            for r in range(1, top + 1):
                out.append((m, n, r))
    return out


def random_monomial(space, rng, degree):
    """A uniform-ish exponent tuple of exactly the given total degree."""
    e = [0] * space.nvars
    for _ in range(degree):
        e[rng.randrange(space.nvars)] += 1
    return tuple(e)


def random_poly(space, rng, max_degree=3, max_terms=4):
    """A random nonzero polynomial with small rational coefficients."""
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            if c:
                terms.append((random_monomial(space, rng, rng.randint(0, max_degree)), c))
        f = Poly(space, terms)
        if f.terms:
            return f


def random_homogeneous(space, rng, degree, max_terms=4):
    """A random nonzero homogeneous polynomial of the given degree."""
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            if c:
                terms.append((random_monomial(space, rng, degree), c))
        f = Poly(space, terms)
        if f.terms:
            return f


def seeded(seed):
    return random.Random(seed)
