"""Exact linear algebra helpers: integer determinants and sparse elimination.

The elimination routine reduces sparse rows (dicts keyed by monomial) against
pivots chosen as the largest key under a caller-supplied order.  That pivot
choice is load-bearing: with the term order as key order, the surviving pivot
keys are exactly the initial monomials of the row span, which the ladder
verification consumes directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import kernels


def det_bareiss(rows):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    t = len(rows)
    for row in rows:
        if len(row) != t:
            raise ValueError("matrix is not square")
    if t == 0:
        return 1
    a = [list(map(int, row)) for row in rows]
    sign = 1
    prev = 1
    for k in range(t - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, t) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, t):
            for j in range(k + 1, t):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[t - 1][t - 1]


def clear_denominators(terms):
    """Scale a monomial-keyed dict of rationals to coprime integers."""
    if not terms:
        return {}
    scale = lcm(*(Fraction(c).denominator for c in terms.values()))
    return {e: int(c * scale) for e, c in terms.items()}


class Eliminator:
    """Incremental sparse row reduction with a fixed pivot-key order."""

    def __init__(self, key):
        self._key = key
        self.pivots = {}

    def reduce(self, row):
        """Fully reduce an integer row; absorb it if independent.

        Returns the pivot key claimed by this row, or None if it reduced to
        zero (i.e. was dependent on rows seen so far).
        """
        key = self._key
        row = dict(row)
        while row:
            lead = max(row, key=key)
            pivot = self.pivots.get(lead)
            if pivot is None:
                self.pivots[lead] = row
                return lead
            row = kernels.row_combine(row, pivot, lead)
        return None

    @property
    def rank(self):
        return len(self.pivots)


def eliminate(rows, key):
    """Rank and sorted pivot keys of a family of sparse rational rows."""
    elim = Eliminator(key)
    for row in rows:
        elim.reduce(clear_denominators(row))
    return elim.rank, sorted(elim.pivots, key=key, reverse=True)
