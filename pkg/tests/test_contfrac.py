from math import comb

import pytest

from involab.catalog import closed_count, rtl_count
from involab.contfrac import (
    Weights,
    cf_catalog,
    parse_monomial,
    parse_weights,
    rtl_gf,
    rtl_gf_from_cf,
)
from involab.errors import DomainError, UnknownName
from involab.series import catalan


def test_parse():
    assert parse_monomial("1") == (0, 0)
    assert parse_monomial("x^2*y") == (2, 1)
    assert parse_monomial("y*x") == (1, 1)
    assert parse_weights("x,y") == Weights(((1, 0), (0, 1)))
    assert parse_weights("x, 1, 1") == Weights(((1, 0),))
    for bad in ("", "z", "x^", "2x"):
        with pytest.raises(DomainError):
            parse_weights(bad)


def test_shifts():
    w = parse_weights("x,y")
    assert w.shift() == Weights(((1, 1), (0, 1)))
    assert w.dshift() == Weights(((1, 0), (0, 1)))
    assert w.squared() == Weights(((2, 0), (0, 2)))
    assert w[5] == (0, 0)


def test_univariate_specializations():
    assert cf_catalog("C_S", "x", 10).at_y(1).integer_coefficients() == [catalan(n) for n in range(11)]
    assert cf_catalog("C_I", "x", 14).at_y(1).integer_coefficients() == [comb(n, n // 2) for n in range(15)]
    assert cf_catalog("D_I", "x", 14).at_y(1).integer_coefficients() == [comb(n, n // 2) for n in range(15)]
    assert cf_catalog("D_S", "x", 10).at_y(1).integer_coefficients() == [catalan(n) for n in range(11)]


def test_marginals():
    base = cf_catalog("C_I", "x", 12)
    assert cf_catalog("C_I", "x,y", 12).at_y(1) == base.at_y(1)
    assert cf_catalog("D_I", "x,y", 12).at_y(1) == base.at_y(1)


def test_example_formulas():
    ci = cf_catalog("C_I", "x,y", 14)
    di = cf_catalog("D_I", "x,y", 14)
    for n in range(1, 15):
        assert ci[n].coeff(1) == closed_count("once_12", n)
        assert ci[n].coeff(2) == closed_count("twice_12", n)
        assert di[n].coeff(1) == closed_count("once_adjacent_12", n)
        assert di[n].coeff(2) == closed_count("twice_adjacent_12", n)
    assert di[4].coeff(1) == 2


def test_errors():
    with pytest.raises(DomainError):
        cf_catalog("C_S", "1,x", 5)
    with pytest.raises(DomainError):
        cf_catalog("D_I", "y", 5)
    with pytest.raises(UnknownName):
        cf_catalog("E_S", "x", 5)


def test_rtl_series():
    r = rtl_gf(14)
    assert (r[3].coeff(1), r[3].coeff(3), r[3].coeff(2)) == (2, 1, 0)
    for n in range(15):
        for s in range(n + 1):
            if n % 2 and s % 2 == 0:
                assert r[n].coeff(s) == 0
            assert r[n].coeff(s) == rtl_count(n, s)
    assert rtl_gf(14) == rtl_gf_from_cf(14)
