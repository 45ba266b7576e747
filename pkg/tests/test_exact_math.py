from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qdrg.exact_math import (
    ROOT_WIDTH,
    IntegerPolynomial,
    charpoly_tridiagonal,
    gaussian_bracket,
    rational_polynomial_to_integer,
    real_roots,
    roots_with_multiplicity,
    squarefree_decomposition,
)


def tridiagonal_oracle(c, a, b):
    """Characteristic polynomial by sympy determinant expansion, lowest degree first."""
    x = sympy.Symbol("x")
    n = len(a)
    M = sympy.zeros(n, n)
    for i in range(n):
        M[i, i] = a[i]
        if i + 1 < n:
            M[i, i + 1] = b[i]
            M[i + 1, i] = c[i]
    poly = sympy.Poly((x * sympy.eye(n) - M).det(), x)
    return tuple(int(v) for v in reversed(poly.all_coeffs()))


def exact_roots(p):
    return [r.exact for r in real_roots(p)]


@pytest.mark.parametrize("i,b,expected", [(0, -2, 0), (1, -2, 1), (3, -2, 3), (4, -2, -5), (3, 2, 7)])
def test_gaussian_bracket(i, b, expected):
    assert gaussian_bracket(i, b) == expected


def test_gaussian_bracket_rejects_zero_base():
    with pytest.raises(ValueError):
        gaussian_bracket(2, 0)


@pytest.mark.parametrize("c,a,b,roots", [
    ((1, 2), (0, 1, 2), (4, 2), [4, 1, -2]),
    ((1,), (0, 0), (1,), [1, -1]),
    ((1, 3, 15), (0, 1, 3, 15), (30, 28, 24), [30, 7, -3, -15]),
    ((1, 3), (0, 1, 3), (6, 4), [6, 1, -3]),
])
def test_charpoly_matches_determinant_and_roots(c, a, b, roots):
    p = charpoly_tridiagonal(c, a, b)
    assert p.coefficients == tridiagonal_oracle(c, a, b)
    assert exact_roots(p) == roots


def test_charpoly_dimension_mismatch():
    with pytest.raises(ValueError):
        charpoly_tridiagonal([1, 2], [0, 1], [4, 2])


@given(st.lists(st.integers(1, 30), min_size=1, max_size=5),
       st.lists(st.integers(0, 30), min_size=6, max_size=6),
       st.lists(st.integers(1, 30), min_size=5, max_size=5))
@settings(max_examples=60, deadline=None)
def test_charpoly_property_against_sympy(c, a, b):
    D = len(c)
    a, b = a[:D + 1], b[:D]
    assert charpoly_tridiagonal(c, a, b).coefficients == tridiagonal_oracle(c, a, b)


def test_simple_integer_roots():
    assert exact_roots(IntegerPolynomial((-1, 0, 1))) == [1, -1]


def test_irrational_roots_are_tight_intervals():
    roots = real_roots(IntegerPolynomial((-2, 0, 1)))
    assert len(roots) == 2 and not any(r.is_rational for r in roots)
    for r, target in zip(roots, (2**0.5, -(2**0.5))):
        assert r.hi - r.lo <= ROOT_WIDTH
        assert r.lo < Fraction(target) < r.hi or abs(float(r) - target) < 1e-12
        assert (r.lo**2 - 2) * (r.hi**2 - 2) <= 0


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        real_roots(IntegerPolynomial(()))


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=12), min_size=1, max_size=6))
@settings(max_examples=80, deadline=None)
def test_rational_roots_recovered_with_multiplicity(roots):
    x = sympy.Symbol("x")
    expr = sympy.prod([x - sympy.Rational(r.numerator, r.denominator) for r in roots])
    coeffs = [Fraction(int(v.p), int(v.q)) for v in reversed(sympy.Poly(expr, x).all_coeffs())]
    p = rational_polynomial_to_integer(coeffs)
    got = {r.exact: m for r, m in roots_with_multiplicity(p)}
    expected = {}
    for r in roots:
        expected[r] = expected.get(r, 0) + 1
    assert got == expected


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5), st.integers(2, 7))
@settings(max_examples=40, deadline=None)
def test_mixed_rational_and_irrational_roots(rational_part, radicand):
    if int(radicand**0.5) ** 2 == radicand:
        radicand += 1
    p = IntegerPolynomial.from_roots(rational_part)
    coeffs = [0] * (len(p.coefficients) + 2)
    for i, c in enumerate(p.coefficients):
        coeffs[i + 2] += c
        coeffs[i] -= radicand * c
    roots = real_roots(IntegerPolynomial(tuple(coeffs)))
    assert sorted(r.exact for r in roots if r.is_rational) == sorted(set(rational_part))
    irrational = [float(r) for r in roots if not r.is_rational]
    assert sorted(irrational) == pytest.approx([-(radicand**0.5), radicand**0.5], abs=1e-11)


def test_squarefree_decomposition_multiplicities():
    p = IntegerPolynomial.from_roots([1, 1, 1, -2, -2, 5])
    mults = sorted(m for _, m in squarefree_decomposition(p))
    assert mults == [1, 2, 3]


def test_pentagon_spectrum_has_irrational_pair():
    p = charpoly_tridiagonal([1, 1], [0, 0, 1], [2, 1])
    roots = real_roots(p)
    assert roots[0].exact == 2
    assert [r.is_rational for r in roots] == [True, False, False]
    golden = (5**0.5 - 1) / 2
    assert [float(r) for r in roots[1:]] == pytest.approx([golden, -golden - 1], abs=1e-12)
