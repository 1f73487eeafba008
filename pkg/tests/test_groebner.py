import pytest
from hypothesis import given, settings, strategies as st

from oracles import quotient_dim
from torpersist.field import QQ, Field
from torpersist.groebner import buchberger, lead_term_ideal, normal_form
from torpersist.polynomials import PolyRing, StructuralError

S = PolyRing(Field(101), "xy")
SQ = PolyRing(QQ, "xy")
S3 = PolyRing(Field(101), "xyz")


def test_arithmetic():
    x, y = SQ.gens
    assert (x + y) * (x - y) == x**2 - y**2
    assert x + SQ.zero() == x
    F2 = PolyRing(Field(2), "xy")
    a, b = F2.gens
    assert (a + b) ** 2 == a**2 + b**2


def test_mismatched_rings_rejected():
    with pytest.raises(StructuralError):
        S.var(0) + SQ.var(0)


def test_parse_roundtrip():
    f = S.parse("3*x^2*y - y^3 + 2")
    assert S.parse(str(f)) == f
    assert not f.is_homogeneous()


def test_monomial_ideal_is_its_own_basis():
    gb = buchberger([S.parse("x^2"), S.parse("y^2")])
    assert sorted(map(str, gb)) == ["x^2", "y^2"]
    assert len(buchberger([], S)) == 0


def test_buchberger_finds_cubic():
    gb = buchberger([S.parse("x^2-y^2"), S.parse("x*y")])
    assert S.parse("y^3") in list(gb)
    assert sorted(S.mono_str(m) for m in lead_term_ideal(gb)) == sorted(["x^2", "x*y", "y^3"])


def test_normal_forms():
    gb = buchberger([S.parse("x^2"), S.parse("y^2")])
    assert normal_form(S.parse("x^2"), gb).is_zero()
    assert normal_form(S.parse("x*y"), gb) == S.parse("x*y")
    gb2 = buchberger([S.parse("x^2-y^2"), S.parse("x*y")])
    assert normal_form(S.parse("x^2*y"), gb2).is_zero()


def test_non_homogeneous_rejected():
    with pytest.raises(ValueError):
        buchberger([S.parse("x^2 - y")])


coeff = st.integers(-4, 4)


def homogeneous(ring, d):
    mons = ring.monomials(d)
    return st.lists(coeff, min_size=len(mons), max_size=len(mons)).map(
        lambda cs: sum((ring.monomial(m, c) for m, c in zip(mons, cs)), ring.zero())
    )


ideals = st.lists(st.integers(2, 3).flatmap(lambda d: homogeneous(S3, d)), min_size=1, max_size=3)


@given(ideals, homogeneous(S3, 3), homogeneous(S3, 2))
@settings(max_examples=30, deadline=None)
def test_normal_form_properties(gens, f, g):
    gb = buchberger(gens)
    nf = normal_form(f, gb)
    assert normal_form(nf, gb) == nf
    lead = lead_term_ideal(gb)
    for m in nf.terms:
        assert not any(all(a <= b for a, b in zip(l, m)) for l in lead)
    prod = normal_form(f * g, gb)
    assert prod == normal_form(normal_form(f, gb) * normal_form(g, gb), gb)


@given(ideals, st.data())
@settings(max_examples=30, deadline=None)
def test_ideal_members_reduce_to_zero(gens, data):
    gb = buchberger(gens)
    f = S3.zero()
    for g in gens:
        if not g.is_zero():
            f = f + data.draw(homogeneous(S3, 5 - g.degree())) * g
    assert normal_form(f, gb).is_zero()


@given(ideals)
@settings(max_examples=25, deadline=None)
def test_standard_monomials_match_macaulay_matrix(gens):
    gb = buchberger(gens)
    lead = lead_term_ideal(gb)
    for d in range(5):
        std = [m for m in S3.monomials(d) if not any(all(a <= b for a, b in zip(l, m)) for l in lead)]
        assert len(std) == quotient_dim("xyz", [str(g) for g in gens if not g.is_zero()], d)
