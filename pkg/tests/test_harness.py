from itertools import islice

import pytest

from conftest import make_ring
from torpersist.harness import (
    ExperimentConfig,
    csv_summary,
    dumps,
    is_m3zero,
    m3zero_rings,
    proof_ledger,
    random_instances,
    run_experiment,
)
from torpersist.field import Field
from torpersist.modules import PresentedModule, cyclic_module, free_module, maximal_ideal, residue_field


def _key(R, M):
    return (R.to_json(), M.to_json())


def test_random_instances_are_deterministic():
    a = [_key(*x) for x in islice(random_instances(42, {"m3zero": True}), 10)]
    b = [_key(*x) for x in islice(random_instances(42, {"m3zero": True}), 10)]
    assert a == b
    c = [_key(*x) for x in islice(random_instances(43, {"m3zero": True}), 10)]
    assert a != c


def test_m3zero_filter_and_nonfree_fraction():
    nonfree = 0
    for R, M in islice(random_instances(5, {"m3zero": True}), 200):
        assert is_m3zero(R) and not R.basis(3)
        assert M.presentation.is_minimal()
        nonfree += not M.is_free()
    assert nonfree >= 60


def test_curated_rings_are_m3zero():
    assert all(is_m3zero(R) for R in m3zero_rings(Field(101)).values())
    assert not is_m3zero(make_ring("x", ["x^4"]))


def test_ledger_examples(E, G):
    led = proof_ledger(E, residue_field(E))
    assert (led.b, led.gamma_N1, led.mu_m) == (2, 0.5, 2)
    assert not led.identity_2
    led = proof_ledger(E, cyclic_module(E, ["x"]))
    assert led.b == 1 and led.mu_L == 1
    led = proof_ledger(G, residue_field(G))
    # m is k^2 over this ring, so gamma(m) = 2/2 - 1 = 0
    assert led.type_R == 2 and led.gamma_N1 == 0 and not led.identity_3
    with pytest.raises(ValueError):
        proof_ledger(E, free_module(E))


def test_m3zero_small_campaign_is_reproducible():
    cfg = ExperimentConfig("m3zero", seed=9, trials=12, rings="mixed")
    a, b = dumps(run_experiment(cfg)), dumps(run_experiment(cfg))
    assert a == b
    rep = run_experiment(cfg)
    assert rep["summary"]["witnesses"] == 0
    assert csv_summary(rep).splitlines()[0].startswith("first_nonvanishing")


def test_m3zero_direct_examples(E):
    from torpersist.harness import _m3zero_check

    rec = _m3zero_check(E, maximal_ideal(E), {})
    assert rec["status"] == "nonfree-consistent" and rec["first_nonvanishing"] == 2
    rec = _m3zero_check(E, free_module(E, [0, 1]), {})
    assert rec["status"] == "free-pass" and rec["tor"]["entries"] == []


def test_window_minimum_enforced():
    with pytest.raises(ValueError):
        ExperimentConfig("m3zero", window=4)


def test_length_criterion_curated(E):
    rep = run_experiment(ExperimentConfig("length", trials=3))
    by_name = {r["sample"]: r for r in rep["curated"]}
    assert by_name["k^4"]["first_nonvanishing"] == 1
    assert by_name["R"]["status"] == "vanishing-iso-R"
    assert by_name["m+k"]["status"].startswith("nonvanishing")
    assert rep["summary"]["exit_code"] == 0


def test_tachikawa_curated():
    rep = run_experiment(ExperimentConfig("tachikawa"))
    by = {r["ring"]: r for r in rep["curated"]}
    assert by["k[x,y]/(x^2,y^2)"]["status"] == "vanishing-gorenstein"
    assert by["k"]["status"] == "vanishing-gorenstein"
    assert by["k[x,y]/(x^2,xy,y^2)"]["first_nonvanishing"] == 1


def test_semidualizing_curated():
    rep = run_experiment(ExperimentConfig("semidualizing", window=4))
    by = {(r["ring"], r["candidate"]): r for r in rep["curated"]}
    assert by[("k[x,y]/(x^2,y^2)", "R")]["semidualizing"]
    assert by[("k[x,y]/(x^2,y^2)", "omega")]["ab97"]["pass"]
    assert by[("k[x,y]/(x^2,y^2)", "k")]["status"] == "not-semidualizing"
    assert by[("k[x,y]/(x^2,y^2)", "k")]["end_length"] == 1
    assert rep["summary"]["exit_code"] == 0


def test_jobs_do_not_change_reports():
    a = run_experiment(ExperimentConfig("m3zero", seed=1, trials=6, jobs=1))
    b = run_experiment(ExperimentConfig("m3zero", seed=1, trials=6, jobs=2))
    assert dumps(a) == dumps(b)
