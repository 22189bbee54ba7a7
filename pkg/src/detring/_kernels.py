"""Pure-Python reference implementations of the hot kernels.

The compiled module ``_kernels_c`` mirrors these signatures exactly; both
operate on plain dicts mapping exponent tuples to nonzero coefficients and on
linear functionals given as tuples of (position, coefficient) pairs.  Keeping
the two in lockstep is load-bearing: the parity tests drive both on the same
inputs.
"""

from math import gcd

BACKEND_NAME = "python"


def poly_mul(a, b):
    """Convolve two term dicts; zero coefficients are dropped."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def poly_addmul(acc, scale, b):
    """In place: acc += scale * b.  Mutates and returns acc."""
    if not scale:
        return acc
    for e, c in b.items():
        cur = acc.get(e)
        if cur is None:
            acc[e] = scale * c
        else:
            cur = cur + scale * c
            if cur:
                acc[e] = cur
            else:
                del acc[e]
    return acc


def _less(a, b):
    """Degree-reverse-lexicographic a < b on rank-indexed exponent tuples."""
    da = sum(a)
    db = sum(b)
    if da != db:
        return da < db
    for i in range(len(a) - 1, -1, -1):
        d = a[i] - b[i]
        if d:
            return d > 0
    return False


def leading_monomial(terms):
    """Largest exponent tuple of a term dict in the block order; None if empty."""
    best = None
    for e in terms:
        if best is None or _less(best, e):
            best = e
    return best


def system_holds(equations, inequalities, v):
    """Check a vector against homogeneous integer functionals.

    equations must evaluate to 0, inequalities to >= 0.  Works for any
    coefficient type with exact comparison (int, Fraction).
    """
    for f in equations:
        s = 0
        for pos, c in f:
            s += c * v[pos]
        if s != 0:
            return False
    for f in inequalities:
        s = 0
        for pos, c in f:
            s += c * v[pos]
        if s < 0:
            return False
    return True


def row_combine(row, pivot, lead):
    """Fraction-free elimination step on integer sparse rows.

    Returns pivot[lead] * row - row[lead] * pivot with the entry at ``lead``
    cancelled, divided by the gcd of the remaining entries.
    """
    pc = pivot[lead]
    rc = row[lead]
    out = {}
    for e, c in row.items():
        out[e] = pc * c
    for e, c in pivot.items():
        cur = out.get(e)
        if cur is None:
            out[e] = -rc * c
        else:
            cur = cur - rc * c
            if cur:
                out[e] = cur
            else:
                del out[e]
    if not out:
        return out
    g = 0
    for c in out.values():
        g = gcd(g, c)
    if g > 1:
        for e in out:
            out[e] //= g
    return out
