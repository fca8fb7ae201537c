"""The fixed case catalog, replayed exactly."""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from abckit.cases import (
    LINE_L3,
    LINE_L4,
    LINE_L6,
    TRIANGLE_VERTICES,
    clip_polygon,
    halfplane_triangle,
    line_intersection,
    verify_case_catalog,
)

F = Fraction


def test_line_intersections_frozen():
    assert line_intersection(LINE_L3, LINE_L4) == (F(49, 800), F(31, 200))
    assert line_intersection(LINE_L3, LINE_L6) == (F(157, 2000), F(33, 250))
    assert line_intersection(LINE_L4, LINE_L6) == (F(17, 240), F(7, 60))
    with pytest.raises(ValueError):
        line_intersection((F(1), F(2), F(0)), (F(2), F(4), F(1)))


def test_halfplane_clip_is_exact_triangle():
    poly = halfplane_triangle()
    assert len(poly) == 3
    assert set(poly) == set(TRIANGLE_VERTICES)
    # clipping by an irrelevant half-plane changes nothing
    assert set(clip_polygon(poly, (F(1), F(0), F(1)))) == set(poly)


def test_catalog_all_pass_at_defaults():
    rep = verify_case_catalog()
    assert rep.delta == F(1, 1000) and rep.epsilon == 0
    assert len(rep.checks) == 11
    assert rep.all_passed
    for c in rep.checks:
        assert isinstance(c.slack, Fraction)  # exact arithmetic only


def test_catalog_frozen_slacks():
    rep = verify_case_catalog(F(1, 1000), F(0))
    expected = {
        "triangle-vertices": (F(0), False),
        "halfplane-coverage": (F(0), False),
        "strip-coverage": (F(49, 1000), False),
        "case1.1-contradiction": (F(43, 6000), False),
        "case1.2-chain": (F(1, 2500), False),
        "subcaseS1-nu1": (F(0), True),
        "subcaseS1-nu2": (F(1, 1200), False),
        "subcaseS2-a3": (F(1, 800), False),
        "geotau3-overlap": (F(1, 1000), False),
        "subcaseS6-final": (F(0), True),
        "robin-derivations": (F(0), True),
    }
    assert [c.name for c in rep.checks] == list(expected)
    for name, (slack, boundary) in expected.items():
        chk = rep.check(name)
        assert chk.passed, name
        assert chk.slack == slack, name
        assert chk.boundary is boundary, name


def test_catalog_sensitive_to_large_delta():
    rep = verify_case_catalog(F(1, 10), F(0))
    assert not rep.all_passed
    assert not rep.check("case1.1-contradiction").passed
    assert not rep.check("geotau3-overlap").passed
    # the purely geometric entries never depend on the slack parameters
    assert rep.check("triangle-vertices").passed
    assert rep.check("halfplane-coverage").passed
    assert rep.check("strip-coverage").passed


def test_catalog_epsilon_padding():
    # a tiny positive epsilon lifts the zero-slack boundary entries
    rep = verify_case_catalog(F(1, 2000), F(1, 10**7))
    assert rep.all_passed
    assert rep.check("robin-derivations").slack > 0
    assert not rep.check("robin-derivations").boundary
    with pytest.raises(ValueError):
        verify_case_catalog(F(-1, 1000), F(0))


def test_catalog_runs_fast():
    t0 = time.perf_counter()
    verify_case_catalog()
    assert time.perf_counter() - t0 < 1.0


def test_report_accessor():
    rep = verify_case_catalog()
    with pytest.raises(KeyError):
        rep.check("missing")
