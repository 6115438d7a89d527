import pytest

from involab.catalog import (
    catalog_names,
    closed_count,
    gf_catalog,
    gf_rational,
    je_empty_closed,
    psi_even,
    psi_odd,
    variants,
)
from involab.errors import DomainError, UnknownName
from involab.series import RationalFunction, fibonacci

X = RationalFunction.x()
QUARTIC = (1 + 3 * X**2 + X**4) * (1 - 3 * X**2 + X**4)


def test_worked_rational_functions():
    assert gf_rational("Ie_12k", k=2) == (1 + X) / (1 - X**4)
    assert gf_rational("Io_12k", k=2) == X**2 * (1 + X) / (1 - X**4)
    assert gf_rational("Ie_12k", k=3) == (1 + X + X**2 - 2 * X**4) / (1 - 4 * X**4)
    assert gf_rational("Ie_rot", k=3, d=1) == (X**4 - X**3 + X**2 - X + 1) / ((1 - X) ** 2 * (1 + X**2))
    assert gf_rational("Ie_12k_once", k=2) == X**2 / (1 - X**4)
    assert gf_rational("Io_12k_once", k=2) == X**4 / (1 - X**4)
    assert gf_rational("Ie_12k_once", k=4) == X**4 * (X**4 + 1) / QUARTIC
    assert gf_rational("Ie_2134k_once", k=4) == X**6 * (2 - X**4) / QUARTIC
    assert gf_rational("Ie_23k1_once", k=3) == 0
    assert gf_rational("Ie_23k1_once", k=4) == X**7 / ((1 - X) * (1 - X**4))
    assert gf_rational("Je_12k", k=2) == 0
    assert gf_rational("Je_2134k", k=3) == X**5 / (1 - 4 * X**4)
    assert gf_rational("Je_2134k_once", k=3) == X**6 / (1 - 4 * X**4)


def test_spot_values():
    assert gf_catalog("Ie_12k", 8, k=2).integer_coefficients() == [1, 1, 0, 0, 1, 1, 0, 0, 1]
    assert gf_catalog("Ie_12k", 8, k=3).integer_coefficients() == [1, 1, 1, 0, 2, 4, 4, 0, 8]
    s = gf_catalog("Je_2134k_once", 10, k=3).integer_coefficients()
    assert (s[6], s[10]) == (1, 4)


def test_fibonacci_patterns():
    once = gf_catalog("Ie_12k_once", 24, k=4).integer_coefficients()
    for n in range(4, 25, 4):
        assert once[n] == fibonacci(n - 3)
    je = gf_catalog("Je_12k", 24, k=4).integer_coefficients()
    for n in range(25):
        assert je[n] == (fibonacci(n - 3) if n >= 5 and n % 4 in (1, 2) else 0)


def test_square_root_families():
    ie = gf_catalog("Ie_empty", 12).integer_coefficients()
    io = gf_catalog("Io_empty", 12).integer_coefficients()
    assert ie == [closed_count("even132", n) for n in range(13)]
    assert io == [closed_count("odd132", n) for n in range(13)]
    a = gf_catalog("Je_empty", 16, variant="statement")
    assert a == gf_catalog("Je_empty", 16, variant="equation") == gf_catalog("Je_empty", 16, variant="closed")
    coeffs = a.integer_coefficients()
    assert coeffs[3:] == [je_empty_closed(n) for n in range(3, 17)]


def test_psi_variants_agree():
    for n in range(3, 40):
        assert psi_even(n) == psi_even(n, "proof")
        assert psi_odd(n) == psi_odd(n, "proof")
    assert psi_odd(3) == 1 and psi_even(3) == 0


def test_closed_counts():
    assert closed_count("even132", 5) == 6 and closed_count("odd132", 5) == 4
    assert [closed_count("rises", 3, r=r) for r in range(3)] == [1, 1, 1]
    assert closed_count("psi_odd", 3) == 1
    assert [closed_count("once_12", n) for n in range(1, 7)] == [0, 1, 0, 1, 0, 1]
    assert closed_count("once_adjacent_12", 4) == 2
    with pytest.raises(UnknownName):
        closed_count("nope", 3)
    with pytest.raises(DomainError):
        closed_count("once_12", 0)
    with pytest.raises(DomainError):
        closed_count("ballot", 4)


def test_errors():
    with pytest.raises(UnknownName):
        gf_catalog("Ie_nothing")
    with pytest.raises(DomainError):
        gf_catalog("Ie_rot", k=4, d=3)
    with pytest.raises(DomainError):
        gf_catalog("Ie_12k")
    with pytest.raises(DomainError):
        gf_catalog("Ie_12k", k=3, variant="nope")
    with pytest.raises(DomainError):
        gf_catalog("Ie_12k", -1, k=3)


def test_variants_listed():
    assert set(variants("Ie_rot")) == {"equation", "statement"}
    assert variants("Io_rot") == variants("Ie_rot")
    assert variants("Ie_12k") == ()


def _params_for(name):
    if "rot" in name:
        return [dict(k=k, d=d) for k, d in ((2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 3))]
    if "empty" in name:
        return [{}]
    lo = 3 if ("23k1" in name or name in ("J_2134k", "Jo_2134k")) else 2
    return [dict(k=k) for k in range(lo, 7)]


@pytest.mark.parametrize("name", catalog_names())
def test_default_series_are_counting_sequences(name):
    for params in _params_for(name):
        coeffs = gf_catalog(name, 20, **params).integer_coefficients()
        assert all(c >= 0 for c in coeffs), (name, params)


@pytest.mark.parametrize("even, odd, total", [
    ("Ie_12k", "Io_12k", "I_12k"),
    ("Ie_2134k", "Io_2134k", "I_2134k"),
    ("Ie_rot", "Io_rot", "I_rot"),
    ("Ie_12k_once", "Io_12k_once", "I_12k_once"),
    ("Je_12k", "Jo_12k", "J_12k"),
    ("Je_2134k", "Jo_2134k", "J_2134k"),
    ("Ie_empty", "Io_empty", "I_empty"),
    ("Je_empty", "Jo_empty", "J_empty"),
])
def test_even_plus_odd_is_total(even, odd, total):
    for params in _params_for(total):
        assert gf_catalog(even, 20, **params) + gf_catalog(odd, 20, **params) == gf_catalog(total, 20, **params)
