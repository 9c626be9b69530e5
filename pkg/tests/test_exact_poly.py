from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thetabarrier.exact_poly import (
    IntPoly,
    ThetaSpec,
    divmod_rational,
    exact_divide,
    find_theta_candidates,
    poly_gcd,
    rational_roots,
    root_multiplicity,
)

X = IntPoly.x()
MU_P5 = IntPoly.from_text("1 0 -4 0 3 0")
SQRT3 = ThetaSpec.from_text("1 0 -3")

small_polys = st.lists(st.integers(-6, 6), min_size=0, max_size=6).map(IntPoly)


def test_arithmetic_examples():
    assert (X * X - 1) + 1 == X * X
    assert X * X == IntPoly.from_text("1 0 0")
    assert (X * X - 3) * X == IntPoly.from_text("1 0 -3 0")


def test_text_and_display():
    assert MU_P5.to_text() == "1 0 -4 0 3 0"
    assert str(MU_P5) == "x^5 - 4x^3 + 3x"
    assert str(IntPoly()) == "0"
    assert str(X - 1) == "x - 1"
    assert IntPoly().degree == float("-inf")


def test_exact_divide_examples():
    assert exact_divide(MU_P5, X * X - 3) == X ** 3 - X
    assert exact_divide(X ** 3 - X, X * X - 3) is None
    assert exact_divide(MU_P5, IntPoly.const(1)) == MU_P5
    with pytest.raises(ZeroDivisionError):
        exact_divide(MU_P5, IntPoly())


@given(small_polys, small_polys.filter(lambda p: not p.is_zero()))
def test_exact_divide_product(a, b):
    assert exact_divide(a * b, b) == a


@given(small_polys, small_polys.filter(lambda p: not p.is_zero()))
def test_divmod_rational_reconstructs(a, b):
    q, r = divmod_rational(a, b)
    assert len(r) < max(len(b.coeffs), 1) or not any(r)
    # a == q*b + r over the rationals
    qb = [Fraction(0)] * (len(q) + len(b.coeffs))
    for i, qi in enumerate(q):
        for j, bj in enumerate(b.coeffs):
            qb[i + j] += qi * bj
    for k, ak in enumerate(a.coeffs):
        lhs = qb[k] if k < len(qb) else 0
        lhs += r[k] if k < len(r) else 0
        assert lhs == ak


def test_gcd_examples():
    assert poly_gcd(X * X - 1, X - 1) == X - 1
    assert poly_gcd(X * X - 3, X.scale(2)) == IntPoly.const(1)
    p = IntPoly.from_text("4 0 -12")
    assert poly_gcd(p, IntPoly()) == p.primitive_part()
    with pytest.raises(ValueError):
        poly_gcd(IntPoly(), IntPoly())


@given(small_polys, small_polys, small_polys)
def test_gcd_divides(a, b, c):
    if (a * c).is_zero() and (b * c).is_zero():
        return
    g = poly_gcd(a * c, b * c)
    if not c.is_zero():
        assert exact_divide(g, c.primitive_part()) is not None
    assert (a * c).is_zero() or exact_divide(a * c, g) is not None


def test_root_multiplicity_examples():
    assert root_multiplicity(MU_P5, SQRT3) == 1
    assert root_multiplicity(IntPoly.from_text("1 0 -3 0 0"), ThetaSpec.rational(0)) == 2
    assert root_multiplicity(X * X - 1, ThetaSpec.rational(0)) == 0
    with pytest.raises(ValueError):
        root_multiplicity(IntPoly(), SQRT3)


@given(st.integers(0, 4), st.integers(0, 3), st.integers(-3, 3))
def test_root_multiplicity_of_constructed_product(k, j, c):
    # (x-c)^k (x^2-2)^j
    p = (X - c) ** k * (X * X - 2) ** j * (X * X + 1)
    assert root_multiplicity(p, ThetaSpec.rational(c)) == k
    assert root_multiplicity(p, ThetaSpec.from_text("1 0 -2")) == j


def test_theta_spec_validation():
    assert ThetaSpec.rational(0).label == "0"
    assert ThetaSpec.rational("1/2").minpoly == IntPoly.from_text("2 -1")
    assert SQRT3.label == "sqrt3"
    for bad in ["1 0 -4", "2 0 -6", "1 -2 1", "0", "-1 0 3"]:
        with pytest.raises(ValueError):
            ThetaSpec.from_text(bad)


def test_rational_roots():
    assert rational_roots(IntPoly.from_text("2 -1")) == [Fraction(1, 2)]
    assert sorted(rational_roots(MU_P5)) == [-1, 0, 1]


def test_find_theta_candidates():
    def texts(p, cap=2):
        return {t.to_text() for t in find_theta_candidates(p, cap)}

    assert texts(MU_P5) == {"1 0", "1 -1", "1 1", "1 0 -3"}
    assert texts(X * X - 1) == {"1 -1", "1 1"}
    assert texts(X) == {"1 0"}
    assert texts(MU_P5, 1) == {"1 0", "1 -1", "1 1"}
