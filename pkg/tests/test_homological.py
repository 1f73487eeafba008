import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import make_ring
from torpersist.complexes import (
    FreeComplex,
    HomIntoModule,
    NotMinimalError,
    ext,
    hom_module,
    homology,
    poincare_series,
    poincare_table,
    tensor_complexes,
    tor,
)
from torpersist.harness import random_module
from torpersist.modules import (
    FreeModule,
    GradedMatrix,
    PresentedModule,
    cyclic_module,
    free_module,
    maximal_ideal,
    residue_field,
)


def x_complex(R):
    return FreeComplex.from_matrices([GradedMatrix.from_strings(R, [0], [1], [["x"]])])


def test_tensor_with_unit(E):
    Y = residue_field(E).resolution.complex(3)
    unit = FreeComplex.concentrated(FreeModule(E, [0]))
    T = tensor_complexes(unit, Y)
    assert T.ranks() == Y.ranks()
    assert T.d_squared_is_zero()


def test_tensor_square_of_x_complex(E):
    X = x_complex(E)
    T = tensor_complexes(X, X)
    assert T.ranks() == {0: 1, 1: 2, 2: 1}
    assert T.free_module(1).twists == (1, 1) and T.free_module(2).twists == (2,)
    assert T.d_squared_is_zero()


def test_hom_complex_examples(E, G):
    H = hom_module(residue_field(E), free_module(E))
    assert H.length == E.type == 1
    assert hom_module(residue_field(G), free_module(G)).length == 2
    unit = FreeComplex.concentrated(FreeModule(E, [0]))
    C = HomIntoModule(unit, maximal_ideal(E))
    assert C.cocycle_module().hilbert() == maximal_ideal(E).hilbert()


def test_tor_examples(E):
    Ex = cyclic_module(E, ["x"])
    rep = tor(Ex, Ex, (1, 4))
    assert rep.totals() == {1: 2, 2: 2, 3: 2, 4: 2}
    assert tor(residue_field(E), residue_field(E), (1, 1)).total(1) == 2
    assert tor(free_module(E, [0, 1]), residue_field(E), (1, 4)).vanishes()


def test_ext_examples(E, G):
    assert ext(free_module(E), maximal_ideal(E), (1, 4)).vanishes()
    wE = E.canonical_module().present()
    assert ext(wE, free_module(E), (0, 0)).total(0) == 4
    assert ext(wE, free_module(E), (1, 6)).vanishes()
    wG = G.canonical_module().present()
    rep = ext(wG, free_module(G), (1, 4), stop_at_first=True)
    assert rep.nonvanishing() == [1]


def test_poincare_tables(E, G):
    B = poincare_table(residue_field(E).resolution.complex(4))
    assert B.totals == [1, 2, 3, 4, 5]
    P = poincare_series(residue_field(E).resolution.complex(4))
    assert P.coeffs == {(i, i): i + 1 for i in range(5)}
    assert poincare_table(free_module(E, [0, 2]).resolution.complex(0)).beta == {(0, 0): 1, (0, 2): 1}
    assert poincare_table(residue_field(G).resolution.complex(3)).totals == [1, 2, 4, 8]
    bad = FreeComplex.from_matrices([GradedMatrix.from_strings(E, [0], [0], [["1"]])])
    with pytest.raises(NotMinimalError):
        poincare_table(bad)


def test_tor_against_betti_numbers(E, G):
    for R in (E, G):
        M = maximal_ideal(R) + residue_field(R, 1)
        res = M.resolution.extend(4)
        rep = tor(M, residue_field(R), (0, 4))
        assert [rep.total(i) for i in range(5)] == [res.rank(i) for i in range(5)]


def test_resolution_homology_is_the_module(E):
    X = maximal_ideal(E).resolution.complex(4)
    H = homology(X)
    assert all(H.total(i) == 0 for i in range(1, 4))
    assert H.total(0) == maximal_ideal(E).length


@given(st.integers(0, 10_000))
@settings(max_examples=15, deadline=None)
def test_tor_is_balanced(seed):
    rng = random.Random(seed)
    R = make_ring("xy", ["x^2", "x*y", "y^3"]) if seed % 2 else make_ring("xy", ["x^2", "y^2"])
    M, N = random_module(rng, R), random_module(rng, R)
    a, b = tor(M, N, (1, 3)), tor(N, M, (1, 3))
    assert a.entries == b.entries


@given(st.integers(0, 10_000))
@settings(max_examples=15, deadline=None)
def test_tensor_of_random_complexes_is_a_complex(seed):
    rng = random.Random(seed)
    R = make_ring("xyz", ["x^2", "y^2", "z^2", "x*y*z"])
    X = random_module(rng, R).resolution.complex(2)
    Y = random_module(rng, R).resolution.complex(2)
    assert X.d_squared_is_zero()
    assert tensor_complexes(X, Y).d_squared_is_zero()


def test_report_json_shape(E):
    rep = tor(residue_field(E), residue_field(E), (1, 2))
    js = rep.to_json()
    assert js["op"] == "tor" and js["window"] == [1, 2]
    assert js["entries"] == [[1, 1, 2], [2, 2, 3]]


def test_tor_over_rationals_matches_prime_field():
    reps = []
    for p in (0, 7, 101):
        R = make_ring("xy", ["x^2", "x*y", "y^3"], p=p)
        M = PresentedModule.from_strings(R, [0, 0], [1, 1], [["x", "y"], ["y", "0"]])
        reps.append(tor(M, M, (1, 3)).entries)
    assert reps[0] == reps[1] == reps[2]
