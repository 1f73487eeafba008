from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from torpersist.series import (
    DimensionError,
    LaurentPoly,
    TwoVariableSeries,
    hilbert_numerator,
    multiplicity,
    multiplicity_polynomial,
    normalize_rational,
    series_div,
    series_mul,
)

t = LaurentPoly({1: 1})
one = LaurentPoly.one()


def test_laurent_arithmetic():
    p = (1 + t) ** 2
    assert p.to_list() == (0, [1, 2, 1])
    assert p.subs_power(-1) * p == LaurentPoly({-2: 1, -1: 4, 0: 6, 1: 4, 2: 1})
    assert p.divmod_exact(1 + t) == 1 + t
    assert (1 + t).divmod_exact(2 + t) is None
    assert p(2) == 9 and p.at_one() == 4


def test_series_division_inverts_multiplication():
    a = 1 + 2 * t + t * t
    inv = series_div(one, a, 6)
    assert series_mul(inv, a, 6) == one
    assert [inv[i] for i in range(5)] == [1, -2, 3, -4, 5]


def test_hilbert_numerators():
    # k[x,y]/(xy): (1 - t^2) / (1 - t)^2
    num = hilbert_numerator([(1, 1)], (1, 1))
    H = normalize_rational(num, (1, 1), cutoff=5)
    assert H.numerator == 1 + t and H.denominator == (1,)
    assert H.expansion == [1, 2, 2, 2, 2, 2]
    assert multiplicity(H) == 2
    E = normalize_rational(hilbert_numerator([(2, 0), (0, 2)], (1, 1)), (1, 1))
    assert E.numerator == (1 + t) ** 2 and E.denominator == ()
    assert multiplicity(E) == 4
    P = normalize_rational(hilbert_numerator([], (1,)), (1,))
    assert P.numerator == one and P.denominator == (1,) and multiplicity(P) == 1


def test_multiplicity_polynomial_examples():
    H = normalize_rational(1 + t, (1,))
    assert multiplicity_polynomial(H, 1) == 1 + t
    A = normalize_rational((1 + t) ** 2, ())
    assert multiplicity_polynomial(A, 0).at_one() == 4
    with pytest.raises(DimensionError):
        multiplicity_polynomial(H, 0)
    with pytest.raises(DimensionError):
        multiplicity(normalize_rational(LaurentPoly(), ()))


def test_weighted_numerator():
    # k[x,y] with weights 1,2 modulo x^2: (1 - t^2)/((1 - t)(1 - t^2)) = 1/(1 - t^2) * (1 + t)
    H = normalize_rational(hilbert_numerator([(2, 0)], (1, 2)), (1, 2), cutoff=6)
    assert H.expansion == [1, 1, 1, 1, 1, 1, 1]


def test_square_substitution():
    P = TwoVariableSeries({(0, 0): 1, (1, 1): 1})
    S = (P * P + P.square_substitution()) * Fraction(1, 2)
    assert S == TwoVariableSeries({(0, 0): 1, (1, 1): 1})


polys = st.dictionaries(st.integers(-3, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(polys, polys)
@settings(max_examples=80)
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).divmod_exact(b) == a
