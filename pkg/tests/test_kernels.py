"""Parity between the compiled kernels and the pure-Python fallback."""

import os
import subprocess
import sys
from fractions import Fraction

import pytest

from detring import kernels
from detring._kernels import (
    leading_monomial as py_leading,
    poly_mul as py_mul,
    row_combine as py_row_combine,
    system_holds as py_holds,
)
from detring.errors import ParameterError
from helpers import seeded

cython_loaded = "cython" in kernels.available_backends()
needs_cython = pytest.mark.skipif(not cython_loaded, reason="compiled backend not built")


def random_terms(rng, nvars, nterms, max_exp=3):
    out = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if c:
            out[e] = c
    return out


def test_python_backend_always_listed():
    names = kernels.available_backends()
    assert "python" in names
    with pytest.raises(ParameterError):
        kernels.use_backend("fortran")


def test_backend_switch_rebinds_module_functions():
    current = kernels.BACKEND
    try:
        kernels.use_backend("python")
        assert kernels.BACKEND == "python"
        assert kernels.poly_mul is py_mul
    finally:
        kernels.use_backend(current)


@needs_cython
def test_product_parity():
    from detring import _kernels_c

    rng = seeded(41)
    for _ in range(40):
        a = random_terms(rng, 6, rng.randint(1, 8))
        b = random_terms(rng, 6, rng.randint(1, 8))
        assert _kernels_c.poly_mul(a, b) == py_mul(a, b)


@needs_cython
def test_leading_monomial_parity():
    from detring import _kernels_c

    rng = seeded(43)
    for _ in range(60):
        t = random_terms(rng, 7, rng.randint(1, 12))
        if not t:
            continue
        assert _kernels_c.leading_monomial(t) == py_leading(t)


@needs_cython
def test_linear_system_parity():
    from detring import _kernels_c

    rng = seeded(47)
    for _ in range(60):
        nv = 5
        eqs = tuple(
            tuple((rng.randrange(nv), rng.randint(-2, 2)) for _ in range(rng.randint(1, 3)))
            for _ in range(rng.randint(0, 3))
        )
        ineqs = tuple(
            tuple((rng.randrange(nv), rng.randint(-2, 2)) for _ in range(rng.randint(1, 3)))
            for _ in range(rng.randint(0, 3))
        )
        v = tuple(rng.randint(-2, 2) for _ in range(nv))
        assert _kernels_c.system_holds(eqs, ineqs, v) == py_holds(eqs, ineqs, v)


@needs_cython
def test_row_reduction_parity():
    from detring import _kernels_c

    rng = seeded(53)
    for _ in range(40):
        cols = [rng.randrange(50) for _ in range(6)]
        row = {c: rng.randint(-9, 9) for c in cols if rng.randint(-9, 9)}
        pivot = {c: rng.randint(-9, 9) for c in cols}
        lead = max(pivot) if pivot else None
        if not pivot or not pivot.get(lead):
            continue
        assert _kernels_c.row_combine(dict(row), pivot, lead) == py_row_combine(dict(row), pivot, lead)


def test_environment_variable_selects_backend():
    code = "import detring.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, DETRING_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    assert out.stdout.strip() == "python"


def test_straightening_agrees_across_backends():
    from detring.poly import XSpace, parse_polynomial
    from detring.straighten import straighten
    from detring.tableaux import Parameters

    params = Parameters(2, 2, 2)
    f = parse_polynomial("x[1,2]*x[2,1] + 2*x[1,1]^2", XSpace(2, 2))
    current = kernels.BACKEND
    results = {}
    try:
        for name in kernels.available_backends():
            kernels.use_backend(name)
            results[name] = [(c, str(b)) for c, b in straighten(f, params).terms]
    finally:
        kernels.use_backend(current)
    vals = list(results.values())
    assert all(v == vals[0] for v in vals)
