"""Determinant counting formulas against direct enumeration, and the
three-way dimension cross-check."""

import pytest

from detring.counting import (
    binomial,
    hilbert_function,
    hodge_dim,
    mu_power,
    mu_power_direct,
    multiplicity,
)
from detring.errors import ParameterError
from detring.linalg import det_bareiss
from detring.tableaux import Parameters
from helpers import parameter_triples


def test_binomial_convention_outside_range():
    assert binomial(5, 2) == 10
    assert binomial(3, 0) == 1
    assert binomial(3, -1) == 0
    assert binomial(2, 5) == 0
    assert binomial(-1, 0) == 0


def test_exact_determinants():
    assert det_bareiss([[6, 3], [4, 3]]) == 6
    assert det_bareiss([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_bareiss([[2, 4], [2, 4]]) == 0
    assert det_bareiss([]) == 1
    with pytest.raises(ValueError):
        det_bareiss([[1, 2], [3]])


def test_generator_counts_of_low_powers():
    params = Parameters(3, 3, 2)
    assert mu_power(params, "p", 1) == 3
    assert mu_power(params, "p", 2) == 6
    assert mu_power(params, "p", 0) == 1
    assert mu_power(params, "q", 1) == 3


def test_rank_one_power_count_is_a_single_binomial():
    for n in (2, 3, 4):
        for t in (1, 2, 3):
            params = Parameters(2, n, 1)
            assert mu_power(params, "p", t) == binomial(t + n - 1, n - 1)
            assert mu_power_direct(params, "p", t) == binomial(t + n - 1, n - 1)


def test_formula_matches_enumeration_small_sweep():
    for (m, n, r) in parameter_triples(4, 4, proper=True):
        params = Parameters(m, n, r)
        for ideal in ("p", "q"):
            for t in (1, 2, 3):
                assert mu_power(params, ideal, t) == mu_power_direct(params, ideal, t)


def test_power_counts_strictly_increase():
    for (m, n, r) in ((3, 3, 2), (4, 3, 1), (2, 5, 1)):
        params = Parameters(m, n, r)
        values = [mu_power(params, "p", t) for t in range(1, 7)]
        for a, b in zip(values, values[1:]):
            assert b > a


def test_transpose_symmetry_of_the_two_ideals():
    for (m, n, r) in parameter_triples(4, 4, proper=True):
        params = Parameters(m, n, r)
        for t in (1, 2, 3):
            assert mu_power(params, "p", t) == mu_power(params.transposed(), "q", t)


def test_counting_rejects_bad_arguments():
    params = Parameters(3, 3, 2)
    with pytest.raises(ParameterError):
        mu_power(params, "x", 1)
    with pytest.raises(ParameterError):
        mu_power(params, "p", -1)
    with pytest.raises(ParameterError):
        mu_power(Parameters(2, 2, 2), "p", 1)
    with pytest.raises(ParameterError):
        multiplicity(Parameters(2, 2, 2))


def test_multiplicity_spot_values():
    assert multiplicity(Parameters(2, 2, 1)) == 2
    assert multiplicity(Parameters(3, 3, 2)) == 3
    assert multiplicity(Parameters(3, 2, 1)) == 3


def test_multiplicity_equals_top_power_counts():
    for (m, n, r) in parameter_triples(4, 4, proper=True):
        params = Parameters(m, n, r)
        e = multiplicity(params)
        assert e == mu_power(params, "p", m - r)
        assert e == mu_power(params, "q", n - r)


def test_grassmannian_dimension_formula():
    assert hodge_dim(2, 3, 1) == 3
    assert hodge_dim(2, 4, 1) == 6
    assert hodge_dim(3, 3, 5) == 1
    assert hodge_dim(2, 4, 0) == 1
    with pytest.raises(ParameterError):
        hodge_dim(3, 2, 1)


def test_dimension_of_degree_slices():
    params = Parameters(2, 2, 1)
    for method in ("bitableaux", "lattice", "rank"):
        assert hilbert_function(params, 2, method) == 9
        assert hilbert_function(params, 0, method) == 1
    assert hilbert_function(Parameters(2, 2, 2), 2) == 10


def test_dimension_methods_agree():
    for (m, n, r) in parameter_triples(3, 3):
        params = Parameters(m, n, r)
        for d in range(3):
            a = hilbert_function(params, d, "bitableaux")
            b = hilbert_function(params, d, "lattice")
            c = hilbert_function(params, d, "rank")
            assert a == b == c
    for (m, n, r, d) in ((4, 3, 2, 5), (4, 4, 1, 4)):
        params = Parameters(m, n, r)
        assert hilbert_function(params, d, "bitableaux") == hilbert_function(params, d, "lattice")


def test_dimension_method_validated():
    with pytest.raises(ParameterError):
        hilbert_function(Parameters(2, 2, 1), 2, "magic")
