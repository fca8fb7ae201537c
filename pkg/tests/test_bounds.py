import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abckit.bounds import (
    ExponentConfiguration,
    SubsetSearchRefusal,
    best_bound,
    determinant_bound,
    evaluate_at,
    extended_fourier_bound,
    fast_best,
    fast_scale,
    fourier_bound,
    geometry_bound,
    thue_bound,
    trivial_bound,
)

F = Fraction


def cfg_of(a, b, c, delta=0, epsilon=0):
    return ExponentConfiguration(
        d=len(a), a=a, b=b, c=c, delta=F(delta), epsilon=F(epsilon)
    )


def zeros(d, delta=0):
    z = [F(0)] * d
    return cfg_of(z, z, z, delta=delta)


# --- frozen single-method examples ---


def test_trivial_frozen():
    cfg = cfg_of([F(33, 100)], [F(33, 100)], [F(34, 100)])
    rep = trivial_bound(cfg)
    assert rep.value == F(66, 100)
    assert rep.witness == {"pair": ["a", "b"]}
    third = [F(1, 3)]
    assert trivial_bound(cfg_of(third, third, third)).value == F(2, 3)
    assert trivial_bound(zeros(2)).value == 0


def test_fourier_frozen():
    # d=1: no subtracted term
    cfg = cfg_of([F(1, 5)], [F(3, 10)], [F(2, 5)])
    rep = fourier_bound(cfg)
    assert rep.value == F(13, 20)  # (1 + 3/10)/2 via pair (a, b)
    assert rep.witness["pair"] == ["a", "b"] and rep.witness["m"] is None
    # d=2: the high-class maximum cancels the series tail
    cfg = cfg_of([F(0), F(1, 5)], [F(0), F(1, 10)], [F(1), F(0)])
    rep = fourier_bound(cfg)
    assert rep.value == F(1, 2)
    assert rep.witness == {"pair": ["a", "b"], "m": 2}
    shifted = cfg_of([F(0), F(1, 5)], [F(0), F(1, 10)], [F(1), F(0)], delta=F(1, 1000))
    assert fourier_bound(shifted).value == F(1, 2) + F(1, 2000)


def test_geometry_frozen():
    # all classes selected pushes W past 1 for free
    cfg = cfg_of([F(1, 3)], [F(1, 3)], [F(1)])
    rep = geometry_bound(cfg)
    assert rep.value == 0
    assert rep.witness == {"I": [1], "Ip": [1], "Ipp": [1]}
    cfg = cfg_of([F(0), F(17, 100)], [F(0), F(17, 100)], [F(0), F(1, 2)])
    rep = geometry_bound(cfg)
    assert rep.value == F(1, 2)
    assert rep.witness == {"I": [], "Ip": [], "Ipp": [2]}
    # empty subsets are always on the table
    assert geometry_bound(zeros(3, delta=F(1, 50))).value == 1 + F(1, 50)


def test_determinant_frozen():
    assert determinant_bound(zeros(2, delta=F(1, 10))).value == 1 + F(1, 10)
    cfg = cfg_of([F(1, 5), F(0)], [F(0), F(3, 10)], [F(0), F(0)])
    rep = determinant_bound(cfg)
    assert rep.value == F(3, 5)
    assert rep.witness == {"pair": ["a", "b"], "p": 1, "q": 2}
    # swapping a and b cannot change the minimized value
    swapped = cfg_of([F(0), F(3, 10)], [F(1, 5), F(0)], [F(0), F(0)])
    assert determinant_bound(swapped).value == F(3, 5)


def test_thue_frozen():
    assert thue_bound(zeros(1, delta=F(1, 100))).value == 1 + F(1, 100)
    cfg = cfg_of(
        [F(0), F(1, 10), F(0), F(1, 20)],
        [F(0), F(1, 5), F(0), F(1, 10)],
        [F(0)] * 4,
    )
    rep = thue_bound(cfg)
    assert rep.value == F(11, 20)  # 1 - (0.3 + 0.15) at p = 2
    assert rep.witness == {"pair": ["a", "b"], "p": 2}


def test_best_frozen():
    rep = best_bound(zeros(2))
    assert rep.value == 0
    assert rep.witness["method"] == "trivial"
    cfg = cfg_of([F(0), F(1, 5)], [F(0), F(1, 10)], [F(1), F(0)])
    # sub-values: trivial 3/10, fourier 1/2, geometry 0 (c's first class
    # covers the target for free), determinant 0, thue 7/10
    assert trivial_bound(cfg).value == F(3, 10)
    assert fourier_bound(cfg).value == F(1, 2)
    assert geometry_bound(cfg).value == 0
    assert determinant_bound(cfg).value == 0
    assert thue_bound(cfg).value == F(7, 10)
    rep = best_bound(cfg)
    assert rep.value == 0
    assert rep.witness["method"] == "geometry"  # first method hitting the min
    assert evaluate_at(cfg, rep.method, rep.witness) == 0


def test_extended_fourier_never_above_fourier():
    rng = random.Random(7)
    for _ in range(200):
        cfg = _random_cfg(rng, max_d=5)
        assert extended_fourier_bound(cfg).value <= fourier_bound(cfg).value


def test_exhaustive_refusal():
    cfg = zeros(13)
    with pytest.raises(SubsetSearchRefusal):
        geometry_bound(cfg, mode="exhaustive")
    rep = best_bound(cfg, geometry_mode="exhaustive")
    assert rep.witness.get("geometry_skipped") is True
    assert rep.value == 0  # trivial still wins on the zero config
    # branch-and-bound keeps working at that size
    assert geometry_bound(cfg).value == 1


# --- randomized invariants ---


def _random_cfg(rng, max_d=4, dens=(2, 3, 4, 5, 6, 10, 12), with_delta=True):
    d = rng.randint(1, max_d)

    def vec():
        return tuple(
            F(rng.randint(0, 8), rng.choice(dens) * 4) for _ in range(d)
        )

    delta = F(rng.randint(0, 10), 1000) if with_delta else F(0)
    return ExponentConfiguration(d=d, a=vec(), b=vec(), c=vec(), delta=delta)


def test_geometry_branch_bound_equals_exhaustive():
    rng = random.Random(20260817)
    for _ in range(250):
        cfg = _random_cfg(rng)
        bb = geometry_bound(cfg, mode="branch-and-bound")
        ex = geometry_bound(cfg, mode="exhaustive")
        assert bb.value == ex.value, cfg
        assert evaluate_at(cfg, "geometry", bb.witness) == bb.value
        assert evaluate_at(cfg, "geometry", ex.witness) == ex.value


def test_witness_validity_all_methods():
    rng = random.Random(99)
    for _ in range(150):
        cfg = _random_cfg(rng, max_d=5)
        for fn in (
            trivial_bound,
            fourier_bound,
            geometry_bound,
            determinant_bound,
            thue_bound,
            extended_fourier_bound,
            best_bound,
        ):
            rep = fn(cfg)
            assert evaluate_at(cfg, rep.method, rep.witness) == rep.value, (fn, cfg)


def test_permutation_invariance():
    from itertools import permutations

    rng = random.Random(5)
    for _ in range(60):
        cfg = _random_cfg(rng, max_d=4)
        base = {
            name: fn(cfg).value
            for name, fn in (
                ("trivial", trivial_bound),
                ("fourier", fourier_bound),
                ("geometry", geometry_bound),
                ("determinant", determinant_bound),
                ("thue", thue_bound),
                ("best", best_bound),
            )
        }
        for perm in permutations((cfg.a, cfg.b, cfg.c)):
            other = ExponentConfiguration(
                d=cfg.d, a=perm[0], b=perm[1], c=perm[2], delta=cfg.delta
            )
            assert trivial_bound(other).value == base["trivial"]
            assert fourier_bound(other).value == base["fourier"]
            assert geometry_bound(other).value == base["geometry"]
            assert determinant_bound(other).value == base["determinant"]
            assert thue_bound(other).value == base["thue"]
            assert best_bound(other).value == base["best"]


def test_delta_monotonicity():
    rng = random.Random(123)
    t = F(3, 500)
    for _ in range(60):
        cfg = _random_cfg(rng, max_d=4)
        bumped = ExponentConfiguration(
            d=cfg.d, a=cfg.a, b=cfg.b, c=cfg.c, delta=cfg.delta + t
        )
        assert trivial_bound(bumped).value == trivial_bound(cfg).value
        assert fourier_bound(bumped).value == fourier_bound(cfg).value + t / 2
        assert geometry_bound(bumped).value == geometry_bound(cfg).value + t
        assert determinant_bound(bumped).value == determinant_bound(cfg).value + t
        assert thue_bound(bumped).value == thue_bound(cfg).value + t


# --- fast path agreement ---


def test_fast_path_matches_canonical():
    grid = 3_000_000
    rng = random.Random(4242)
    for _ in range(200):
        d = rng.randint(1, 6)

        def vec():
            return tuple(
                F(rng.randint(0, grid // 3), grid) for _ in range(d)
            )

        cfg = ExponentConfiguration(
            d=d, a=vec(), b=vec(), c=vec(), delta=F(rng.randint(0, 3000), grid)
        )
        vecs, dn = fast_scale(cfg, grid)
        num, den, method = fast_best(vecs, dn, grid)
        rep = best_bound(cfg)
        assert F(num, den) == rep.value
        assert method == rep.witness["method"]


def test_fast_path_restricted_methods():
    cfg = cfg_of([F(1, 10), F(1, 5)], [F(1, 10), F(1, 5)], [F(3, 10), F(0)])
    vecs, dn = fast_scale(cfg, 30)
    num, den, method = fast_best(vecs, dn, 30, methods=("trivial",))
    assert method == "trivial"
    assert F(num, den) == trivial_bound(cfg).value


def test_fast_scale_rejects_off_grid():
    cfg = cfg_of([F(1, 7)], [F(0)], [F(0)])
    with pytest.raises(ValueError):
        fast_scale(cfg, 3_000_000)


# --- configuration plumbing ---


def test_config_accessors():
    cfg = cfg_of(
        [F(1, 10), F(1, 5)], [F(1, 20), F(1, 4)], [F(0), F(3, 10)], delta=F(1, 1000)
    )
    assert cfg.totals == (F(3, 10), F(3, 10), F(3, 10))
    assert cfg.slack("a") == F(1, 3) - F(3, 10)
    assert cfg.slack_ab == 2 * (F(1, 3) - F(3, 10))
    assert cfg.slack_total == 1 - F(9, 10)
    assert cfg.class_sums == (F(3, 20), F(3, 4))
    assert cfg.max_ab == (F(1, 10), F(1, 4))
    assert cfg.min_ab == (F(1, 20), F(1, 5))
    assert cfg.sum_bc == (F(1, 20), F(11, 20))


def test_sorted_by_third():
    cfg = cfg_of(
        [F(0), F(0), F(1, 10)], [F(0), F(0), F(3, 10)], [F(0), F(0), F(1, 5)]
    )
    ordered = cfg.sorted_by_third()
    assert ordered.a[2] == F(3, 10)
    assert ordered.b[2] == F(1, 5)
    assert ordered.c[2] == F(1, 10)
    assert best_bound(ordered).value == best_bound(cfg).value
    with pytest.raises(ValueError):
        cfg_of([F(0)], [F(0)], [F(0)]).sorted_by_third()


def test_config_validation():
    with pytest.raises(ValueError):
        cfg_of([F(-1, 10)], [F(0)], [F(0)])
    with pytest.raises(ValueError):
        ExponentConfiguration(d=2, a=(F(0),), b=(F(0), F(0)), c=(F(0), F(0)))
    with pytest.raises(ValueError):
        zeros(0)
    with pytest.raises(ValueError):
        ExponentConfiguration(
            d=1, a=(F(0),), b=(F(0),), c=(F(0),), delta=F(-1, 10)
        )


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6))
def test_best_below_each_method(seed):
    cfg = _random_cfg(random.Random(seed), max_d=4)
    best = best_bound(cfg)
    for fn in (trivial_bound, fourier_bound, geometry_bound, determinant_bound, thue_bound):
        assert best.value <= fn(cfg).value
