"""Exact sparse polynomials over Q on the two variable spaces of the construction.

A monomial is an exponent tuple indexed by *rank position*: position 0 belongs
to the largest variable of the space's ordering.  On the y/z space the ordering
is the block ranking

    y[m,1] > y[m-1,1] > ... > y[1,1] > y[m,2] > ... > y[1,r] >
    z[1,n] > ... > z[1,1] > z[2,n] > ... > z[r,1]

(y column by column, each column from the bottom; then z row by row, each row
from the right), refined degree-reverse-lexicographically: a > b iff
deg a > deg b, or degrees agree and the last nonzero entry of a - b along the
ranking is negative.  With rank-indexed tuples this collapses to the sort key
``(sum(e), tuple(-x for x in reversed(e)))``, compared componentwise.

On the x space the same degree-reverse-lexicographic recipe over the row-major
ranking x[1,1] > x[1,2] > ... is used only to make printing canonical; no
result depends on it.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import kernels
from .errors import ParseError, SpaceMismatchError


class VariableSpace:
    """Finite ordered list of variables; monomials are rank-indexed tuples."""

    def __init__(self, keys, signature):
        self._keys = tuple(keys)
        self._pos = {k: p for p, k in enumerate(self._keys)}
        self._signature = signature
        self.nvars = len(self._keys)
        self.zero_monomial = (0,) * self.nvars

    def __eq__(self, other):
        return isinstance(other, VariableSpace) and self._signature == other._signature

    def __hash__(self):
        return hash(self._signature)

    def __repr__(self):
        kind, *dims = self._signature
        return f"{type(self).__name__}({', '.join(map(str, dims))})"

    def key(self, pos):
        """(letter, i, j) of the variable at a rank position."""
        return self._keys[pos]

    def label(self, pos):
        letter, i, j = self._keys[pos]
        return f"{letter}[{i},{j}]"

    def position(self, letter, i, j):
        try:
            return self._pos[(letter, i, j)]
        except KeyError:
            raise ParseError(f"no variable {letter}[{i},{j}] on {self!r}") from None

    def has(self, letter, i, j):
        return (letter, i, j) in self._pos

    def unit(self, pos):
        e = [0] * self.nvars
        e[pos] = 1
        return tuple(e)


class XSpace(VariableSpace):
    """The m*n matrix entry variables x[i,j]."""

    def __init__(self, m, n):
        self.m = m
        self.n = n
        keys = [("x", i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
        super().__init__(keys, ("x", m, n))

    def x(self, i, j):
        return self._pos[("x", i, j)]


class YZSpace(VariableSpace):
    """The factorization variables: y is m x r, z is r x n, ranked as above."""

    def __init__(self, m, r, n):
        self.m = m
        self.r = r
        self.n = n
        keys = []
        for j in range(1, r + 1):
            for i in range(m, 0, -1):
                keys.append(("y", i, j))
        for u in range(1, r + 1):
            for v in range(n, 0, -1):
                keys.append(("z", u, v))
        super().__init__(keys, ("yz", m, r, n))
        self.y_count = m * r

    def y(self, i, j):
        return self._pos[("y", i, j)]

    def z(self, u, v):
        return self._pos[("z", u, v)]

    def bidegree(self, exps):
        """(y-degree, z-degree) of an exponent tuple."""
        dy = sum(exps[: self.y_count])
        dz = sum(exps[self.y_count :])
        return dy, dz


def drevlex_key(exps):
    """Sort key realizing the order: bigger key means bigger monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def compare_monomials(space, a, b):
    """-1, 0, or 1 as a <, =, > b in the space's order."""
    if len(a) != space.nvars or len(b) != space.nvars:
        raise SpaceMismatchError(
            f"exponent tuples of length {len(a)}, {len(b)} on a space with {space.nvars} variables"
        )
    ka = drevlex_key(a)
    kb = drevlex_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


class Poly:
    """Sparse polynomial: dict from exponent tuple to nonzero Fraction/int.

    Treated as immutable by convention; arithmetic returns fresh objects.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space, terms=()):
        d = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            if len(e) != space.nvars:
                raise SpaceMismatchError(
                    f"exponent tuple of length {len(e)} on a space with {space.nvars} variables"
                )
            cur = d.get(e)
            cur = c if cur is None else cur + c
            if cur:
                d[e] = cur
            else:
                d.pop(e, None)
        self.space = space
        self.terms = d

    @classmethod
    def _raw(cls, space, terms):
        """Wrap an already-clean term dict without copying."""
        p = object.__new__(cls)
        p.space = space
        p.terms = terms
        return p

    @classmethod
    def zero(cls, space):
        return cls._raw(space, {})

    @classmethod
    def constant(cls, space, c):
        return cls._raw(space, {space.zero_monomial: c} if c else {})

    @classmethod
    def variable(cls, space, pos):
        return cls._raw(space, {space.unit(pos): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other):
        if self.space != other.space:
            raise SpaceMismatchError(f"operands on {self.space!r} and {other.space!r}")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            out = dict(self.terms)
            kernels.poly_addmul(out, 1, other.terms)
            return Poly._raw(self.space, out)
        if isinstance(other, (int, Fraction)):
            return self + Poly.constant(self.space, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            out = dict(self.terms)
            kernels.poly_addmul(out, -1, other.terms)
            return Poly._raw(self.space, out)
        if isinstance(other, (int, Fraction)):
            return self - Poly.constant(self.space, other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return Poly._raw(self.space, kernels.poly_mul(self.terms, other.terms))
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.space)
            return Poly._raw(self.space, {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.constant(self.space, 1)
        for _ in range(k):
            out = out * self
        return out

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self):
        """(exponent tuple, coefficient) of the largest term; ValueError on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = kernels.leading_monomial(self.terms)
        return e, self.terms[e]

    def sorted_terms(self):
        """Terms in descending order, largest first."""
        return sorted(self.terms.items(), key=lambda item: drevlex_key(item[0]), reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.space!r}, {format_poly(self)!r})"


def leading_term(f):
    """(exponent tuple, coefficient) of the largest term of a nonzero Poly."""
    return f.leading()


def format_coefficient(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(space, exps):
    """Canonical text of a monomial, variables listed largest first; '1' if empty."""
    parts = []
    for pos, e in enumerate(exps):
        if e == 1:
            parts.append(space.label(pos))
        elif e:
            parts.append(f"{space.label(pos)}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(f):
    """Canonical text: terms in descending order, grammar-compatible."""
    if not f.terms:
        return "0"
    chunks = []
    for e, c in f.sorted_terms():
        mono = format_monomial(f.space, e)
        cf = Fraction(c)
        neg = cf < 0
        mag = -cf if neg else cf
        if mono == "1":
            body = format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coefficient(mag)}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"{' - ' if neg else ' + '}{body}")
    return "".join(chunks)


_TOKEN = re.compile(r"\d+|[xyz]|\[|\]|\^|\*|,|\+|-|/|\S")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.toks = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def expect(self, tok):
        got = self.peek()
        if got != tok:
            raise ParseError(f"expected {tok!r}, found {got!r}", self.pos())
        self.i += 1


def _parse_uint(s):
    tok = s.peek()
    if tok is None or not tok.isdigit():
        raise ParseError(f"expected an unsigned integer, found {tok!r}", s.pos())
    s.next()
    return int(tok)


def _parse_var(s, space):
    where = s.pos()
    letter = s.next()
    if letter not in ("x", "y", "z"):
        raise ParseError(f"expected a variable, found {letter!r}", where)
    s.expect("[")
    i = _parse_uint(s)
    s.expect(",")
    j = _parse_uint(s)
    s.expect("]")
    if not space.has(letter, i, j):
        raise ParseError(f"variable {letter}[{i},{j}] is not on {space!r}", where)
    return space.position(letter, i, j)


def _parse_factor(s, space, exps):
    pos = _parse_var(s, space)
    e = 1
    if s.peek() == "^":
        s.next()
        e = _parse_uint(s)
    exps[pos] += e


def _parse_term(s, space):
    coeff = 1
    exps = [0] * space.nvars
    tok = s.peek()
    if tok is not None and tok.isdigit():
        num = _parse_uint(s)
        if s.peek() == "/":
            s.next()
            den = _parse_uint(s)
            if den == 0:
                raise ParseError("zero denominator", s.pos())
            coeff = Fraction(num, den)
        else:
            coeff = num
        if s.peek() == "*":
            s.next()
            _parse_factor(s, space, exps)
        else:
            return tuple(exps), coeff
    else:
        _parse_factor(s, space, exps)
    while s.peek() == "*":
        s.next()
        _parse_factor(s, space, exps)
    return tuple(exps), coeff


def parse_polynomial(text, space):
    """Parse the whitespace-insensitive textual form onto the given space.

    Grammar: signed sum of terms; a term is a rational coefficient, a product
    of variable powers, or ``coeff * factors``; variables are 1-based like
    ``y[2,1]``; exponents via ``^``.
    """
    s = _Scanner(text)
    if s.peek() is None:
        raise ParseError("empty input", 0)
    terms = []
    sign = 1
    if s.peek() in ("+", "-"):
        sign = -1 if s.next() == "-" else 1
    while True:
        exps, coeff = _parse_term(s, space)
        terms.append((exps, sign * coeff))
        tok = s.peek()
        if tok is None:
            break
        if tok not in ("+", "-"):
            raise ParseError(f"expected '+', '-', or end of input, found {tok!r}", s.pos())
        sign = -1 if s.next() == "-" else 1
    return Poly(space, terms)
