import random

from hypothesis import given, settings, strategies as st

from conftest import make_ring
from torpersist.complexes import FreeComplex
from torpersist.identities import (
    check_ab97,
    check_epsilon_identity,
    check_hilbert_poincare,
    check_lemma_hilbert_formulas,
    check_poincare_s2,
    square_hilbert_formulas,
)
from torpersist.modules import FreeModule, GradedMatrix, cyclic_module, free_module, residue_field
from torpersist.series import LaurentPoly

t = LaurentPoly({1: 1})


def test_hilbert_poincare_examples(E):
    v = check_hilbert_poincare(residue_field(E), 4)
    assert v.passed and v.window == [0, 4]
    assert v.detail["betti_totals"] == [1, 2, 3, 4, 5]
    assert check_hilbert_poincare(free_module(E, [0, 1]), 5).passed
    assert check_hilbert_poincare(cyclic_module(E, ["x"]), 8).passed


def test_poincare_s2_examples(E):
    X = FreeComplex.from_matrices([GradedMatrix.from_strings(E, [0], [1], [["x"]])])
    v = check_poincare_s2(X)
    assert v.passed and v.detail["constructed"] == [[0, 0, 1], [1, 1, 1]]
    assert check_poincare_s2(FreeComplex.concentrated(FreeModule(E, [0, 0]))).detail["constructed"] == [[0, 0, 3]]
    assert check_poincare_s2(residue_field(E).resolution.complex(4)).passed


def test_square_formulas_worked_cases(E):
    HR = E.hilbert_polynomial()
    v = check_lemma_hilbert_formulas(free_module(E))
    assert v.passed
    v = check_lemma_hilbert_formulas(free_module(E, [1, 0]))
    assert v.passed
    lo, hi = v.detail["degrees"]
    s2 = HR * (1 + t + t * t)
    w2 = HR * t
    assert v.detail["H_S2"] == [s2[d] for d in range(lo, hi + 1)]
    assert v.detail["H_W2"] == [w2[d] for d in range(lo, hi + 1)]
    fs, fw = square_hilbert_formulas(HR, 2 * HR * t, 8)
    assert fs == 3 * HR * t * t and fw == HR * t * t


def test_square_formulas_inapplicable_when_tor_survives(E):
    v = check_lemma_hilbert_formulas(residue_field(E))
    assert v.passed is None and "inapplicable" in v.tags


@given(st.lists(st.integers(-2, 3), min_size=1, max_size=4), st.sampled_from([0, 1, 2]))
@settings(max_examples=25, deadline=None)
def test_square_formulas_hold_for_free_modules(twists, which):
    R = [make_ring("xy", ["x^2", "y^2"]), make_ring("xy", ["x^2", "x*y", "y^2"]), make_ring("x", ["x^3"])][which]
    v = check_lemma_hilbert_formulas(free_module(R, sorted(twists)))
    assert v.passed, v.detail


def test_epsilon_examples():
    c = check_epsilon_identity(1 + t, 1 + t)
    assert c.rhs.is_zero() and c.eps_wedge.is_zero()
    c = check_epsilon_identity(1 + 2 * t + t * t, 1 + 2 * t + t * t)
    assert c.rhs.is_zero()
    c = check_epsilon_identity(1 + t, 2 + t)
    assert c.rhs_at_one == 6


def test_semidualizing_series_examples(E, G):
    HE = E.hilbert_polynomial()
    assert check_ab97(HE, HE).passed
    assert check_ab97(HE, LaurentPoly({0: 1, 1: 2, 2: 1})).passed
    c = check_ab97(1 + 2 * t, 2 + t)
    assert c.passed and c.lhs == LaurentPoly({-1: 2, 0: 5, 1: 2}) and c.multiplicities_equal
    assert not check_ab97(G.hilbert_polynomial(), residue_field(G).hilbert()).passed


def test_verdicts_are_reproducible(E):
    a = check_hilbert_poincare(residue_field(E), 3).to_json()
    b = check_hilbert_poincare(residue_field(E), 3).to_json()
    assert a == b and a["inputs-hash"] == b["inputs-hash"]
    assert set(a) >= {"identity", "inputs-hash", "window", "pass", "witness-degree-on-fail"}


def test_hilbert_poincare_on_random_modules(Q3):
    from torpersist.harness import random_module

    rng = random.Random(11)
    for _ in range(8):
        assert check_hilbert_poincare(random_module(rng, Q3), 4).passed
