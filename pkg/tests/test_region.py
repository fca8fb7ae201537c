"""Region feasibility, sampling, and the falsification search."""

from __future__ import annotations

from fractions import Fraction

import pytest

from abckit.bounds import ExponentConfiguration, best_bound
from abckit.region import (
    RegionSearchReport,
    check_constraints,
    corner_config,
    explore_theta,
    maximize_nu,
    sample_feasible,
)

F = Fraction

MILLI = F(1, 1000)


def balanced_config() -> ExponentConfiguration:
    # totals all 0.33; weighted c-sum exactly 1
    return ExponentConfiguration(
        d=6,
        a=(F(33, 100), F(0), F(0), F(0), F(0), F(0)),
        b=(F(33, 100), F(0), F(0), F(0), F(0), F(0)),
        c=(F(0), F(0), F(8, 25), F(1, 100), F(0), F(0)),
        delta=MILLI,
        epsilon=MILLI,
    )


def test_constraints_frozen_slacks():
    rep = check_constraints(balanced_config())
    assert rep.feasible
    assert rep.record("C2-ab").slack == F(1, 10**6)
    assert rep.record("C3-grand-total").slack == F(1, 100)
    assert rep.record("C4-a-upper").slack == F(21, 2000)
    assert rep.record("C4-a-lower").slack == F(11, 1000)
    assert rep.record("C1-weighted-c-lower").slack == F(1, 10**6)
    assert rep.record("C1-weighted-a").slack == F(67, 100)
    # deviation diagnostics
    assert rep.record("R2-ab").slack == F(1, 10**6)
    assert rep.record("R3-upper").slack == MILLI
    assert rep.record("R3-lower").slack == F(11, 1000)
    assert rep.record("R3-lower").strict
    assert rep.record("R1-a-upper").slack == F(3, 250)


def test_constraints_catch_violation():
    cfg = ExponentConfiguration(
        d=6,
        a=(F(33, 100),) + (F(0),) * 5,
        b=(F(33, 100),) + (F(0),) * 5,
        c=(F(33, 100),) + (F(0),) * 5,  # weighted c-sum 0.33 < 1 - eps^2
        delta=MILLI,
        epsilon=MILLI,
    )
    rep = check_constraints(cfg)
    assert not rep.feasible
    assert not rep.record("C1-weighted-c-lower").satisfied
    assert rep.record("C2-ab").satisfied
    with pytest.raises(KeyError):
        rep.record("C9")


def test_sampler_feasible_and_deterministic():
    xs = sample_feasible(6, MILLI, MILLI, 25, seed=11)
    ys = sample_feasible(6, MILLI, MILLI, 25, seed=11)
    assert xs == ys
    assert len(xs) == 25
    for cfg in xs:
        assert check_constraints(cfg).feasible
    zs = sample_feasible(6, MILLI, MILLI, 5, seed=12)
    assert zs != xs[:5]


def test_sampler_coarse_grid():
    # denominator-12 lattice: totals are forced to 1/3 there
    xs = sample_feasible(6, MILLI, MILLI, 8, seed=2, grid=12)
    assert len(xs) == 8
    for cfg in xs:
        assert check_constraints(cfg).feasible
        for name in ("a", "b", "c"):
            for entry in cfg.vector(name):
                assert 12 % entry.denominator == 0
        assert cfg.totals == (F(1, 3), F(1, 3), F(1, 3))


def test_sampler_argument_errors():
    with pytest.raises(ValueError):
        sample_feasible(2, MILLI, MILLI, 5, seed=0)
    with pytest.raises(ValueError):
        sample_feasible(6, MILLI, MILLI, 0, seed=0)


def test_corner_config_hits_class_sums():
    cfg = corner_config(6, MILLI, MILLI, F(49, 800), F(31, 200))
    assert cfg is not None
    assert cfg.class_sums[0] == F(49, 800)
    assert cfg.class_sums[1] == F(31, 200)
    assert check_constraints(cfg).feasible
    for s1, s2 in ((F(157, 2000), F(33, 250)), (F(17, 240), F(7, 60))):
        got = corner_config(6, MILLI, MILLI, s1, s2)
        assert got is not None and got.class_sums[:2] == (s1, s2)


def test_search_basic_run():
    rep = maximize_nu(6, MILLI, MILLI, budget=1500, seed=3, streams=4)
    assert isinstance(rep, RegionSearchReport)
    assert rep.outcome == "ok"
    assert rep.feasible > 0
    assert rep.maximum is not None
    # report invariant: the maximum replays through the canonical evaluator
    assert best_bound(rep.argmax).value == rep.maximum
    assert rep.maximum <= F(33, 50)
    assert rep.verdict
    assert rep.strategy_mix["corners"] > 0
    assert sum(rep.method_wins.values()) == rep.feasible
    assert check_constraints(rep.argmax).feasible


def test_search_thread_count_is_cosmetic():
    one = maximize_nu(6, MILLI, MILLI, budget=600, seed=5, streams=3, threads=1)
    three = maximize_nu(6, MILLI, MILLI, budget=600, seed=5, streams=3, threads=3)
    assert one.maximum == three.maximum
    assert one.argmax == three.argmax
    assert one.method_wins == three.method_wins
    assert three.threads == 3


def test_search_region_empty_low_dimension():
    rep = maximize_nu(2, MILLI, MILLI, budget=10, seed=0)
    assert rep.outcome == "region-empty"
    assert rep.verdict and rep.maximum is None and rep.feasible == 0
    # slacks too generous for the capacity argument -> refuse instead
    with pytest.raises(ValueError):
        maximize_nu(2, F(1, 5), MILLI, budget=10, seed=0)


def test_search_restricted_methods():
    rep = maximize_nu(
        6, MILLI, MILLI, budget=400, seed=7, streams=2, methods=("trivial",)
    )
    assert set(rep.method_wins) == {"trivial"}
    # pair-total floor: the trivial bound can never drop below 0.66 - eps^2
    assert rep.maximum >= F(33, 50) - F(1, 10**6)


def test_search_argument_errors():
    with pytest.raises(ValueError):
        maximize_nu(6, MILLI, MILLI, budget=0)
    with pytest.raises(ValueError):
        maximize_nu(6, MILLI, MILLI, budget=10, methods=("nope",))
    with pytest.raises(ValueError):
        maximize_nu(6, MILLI, MILLI, budget=10, grid=12)  # delta off-lattice


def test_theta_exploration():
    rep = explore_theta(
        6, MILLI, MILLI, budget=900, seed=1, rounds=3, streams=2,
        methods=("trivial",),
    )
    assert not rep.certified
    assert len(rep.rounds) == 3
    assert rep.sup is not None and rep.sup >= F(33, 50) - F(1, 10**6)
    assert rep.theta_estimate == rep.sup
    assert best_bound(rep.argmax, methods=("trivial",)).value == rep.sup
