# cython: language_level=3
"""Compiled mirror of the pure-Python kernels.

Signatures and semantics match detring._kernels exactly; the parity tests
drive both implementations on identical inputs.  Exponents are assumed to fit
a C long (monomial degrees do, by orders of magnitude); coefficients stay
arbitrary Python numbers.
"""

from math import gcd

BACKEND_NAME = "cython"


def poly_mul(a, b):
    """Convolve two term dicts; zero coefficients are dropped."""
    cdef dict da = <dict?>a
    cdef dict db = <dict?>b
    cdef dict out = {}
    cdef tuple ea, eb
    cdef list buf
    cdef Py_ssize_t k, L
    cdef object ca, cb, cur, e
    if len(da) > len(db):
        da, db = db, da
    for ea, ca in da.items():
        for eb, cb in db.items():
            L = len(ea)
            buf = [None] * L
            for k in range(L):
                buf[k] = <long>ea[k] + <long>eb[k]
            e = tuple(buf)
            cur = out.get(e)
            if cur is None:
                out[e] = ca * cb
            else:
                cur = cur + ca * cb
                if cur:
                    out[e] = cur
                else:
                    del out[e]
    return out


def poly_addmul(acc, scale, b):
    """In place: acc += scale * b.  Mutates and returns acc."""
    cdef dict dacc = <dict?>acc
    cdef dict db = <dict?>b
    cdef object e, c, cur
    if not scale:
        return dacc
    for e, c in db.items():
        cur = dacc.get(e)
        if cur is None:
            dacc[e] = scale * c
        else:
            cur = cur + scale * c
            if cur:
                dacc[e] = cur
            else:
                del dacc[e]
    return dacc


cdef bint _less(tuple a, tuple b) except? -1:
    cdef Py_ssize_t i
    cdef Py_ssize_t L = len(a)
    cdef long da = 0
    cdef long db = 0
    cdef long d
    for i in range(L):
        da += <long>a[i]
        db += <long>b[i]
    if da != db:
        return da < db
    for i in range(L - 1, -1, -1):
        d = <long>a[i] - <long>b[i]
        if d != 0:
            return d > 0
    return False


def leading_monomial(terms):
    """Largest exponent tuple of a term dict in the block order; None if empty."""
    cdef tuple best = None
    cdef tuple e
    for e in terms:
        if best is None or _less(best, e):
            best = e
    return best


def system_holds(equations, inequalities, v):
    """Check a vector against homogeneous integer functionals."""
    cdef tuple f, pair
    cdef Py_ssize_t p
    cdef object s, vv
    vv = v
    for f in equations:
        s = 0
        for pair in f:
            p = pair[0]
            s = s + pair[1] * vv[p]
        if s != 0:
            return False
    for f in inequalities:
        s = 0
        for pair in f:
            p = pair[0]
            s = s + pair[1] * vv[p]
        if s < 0:
            return False
    return True


def row_combine(row, pivot, lead):
    """Fraction-free elimination step on integer sparse rows."""
    cdef dict drow = <dict?>row
    cdef dict dpivot = <dict?>pivot
    cdef object pc = dpivot[lead]
    cdef object rc = drow[lead]
    cdef dict out = {}
    cdef object e, c, cur, g
    for e, c in drow.items():
        out[e] = pc * c
    for e, c in dpivot.items():
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
            out[e] = out[e] // g
    return out
