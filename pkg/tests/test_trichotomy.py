import pytest

from chdyn import (
    JuliaClass,
    McMullenParams,
    build_mcmullen,
    classify_mcmullen,
    classify_ra,
    escape_radius,
    orbit,
)
from chdyn.errors import DegenerateParameter, ParameterTooLarge
from chdyn.trichotomy import ESCAPE, POLE_PASSAGE


def test_escape_radius():
    p = McMullenParams(4, 2, -0.28)
    assert abs(escape_radius(p) - 2.28 ** (1 / 3)) < 1e-14
    # never below 1
    assert escape_radius(McMullenParams(2, 2, 1e-8)) >= 1.0


def test_orbit_records_escape():
    p = McMullenParams(4, 2, -0.455)
    M = build_mcmullen(p)
    rec = orbit(M, 2.0 + 0j, 50, escape_radius(p))
    assert rec.events and rec.events[-1][1] == ESCAPE
    assert not rec.truncated


def test_mcmullen_anchors():
    got = {
        lam: classify_mcmullen(McMullenParams(4, 2, lam)).julia_class
        for lam in (0.005, -0.28, -0.455)
    }
    assert got[0.005] is JuliaClass.CANTOR_CIRCLES
    assert got[-0.28] is JuliaClass.SIERPINSKI
    assert got[-0.455] is JuliaClass.CANTOR


def test_mcmullen_escape_counts():
    rep = classify_mcmullen(McMullenParams(4, 2, 0.005))
    assert rep.m == 2
    assert any(k == POLE_PASSAGE for _, k in rep.evidence.events)
    rep = classify_mcmullen(McMullenParams(4, 2, -0.28))
    assert rep.m == 3
    assert rep.params["family"] == "mcmullen"
    assert rep.thresholds["escape_radius"] > 1


def test_mcmullen_unresolved_interior():
    # tiny lambda on the (2,2) family: critical orbit stays bounded
    rep = classify_mcmullen(McMullenParams(2, 2, 1e-6), max_iter=50)
    assert rep.julia_class is JuliaClass.UNRESOLVED
    assert rep.m is None
    assert rep.evidence.truncated


def test_ra_anchors():
    got = {a: classify_ra(a) for a in (-0.0003, -0.0164, -0.028)}
    assert got[-0.0003].julia_class is JuliaClass.CANTOR_CIRCLES
    assert got[-0.0003].m == 2
    assert got[-0.0164].julia_class is JuliaClass.SIERPINSKI
    assert got[-0.0164].m == 3
    assert got[-0.028].julia_class is JuliaClass.CANTOR
    assert got[-0.028].params == {"family": "ch", "a": complex(-0.028)}


def test_ra_guard_rails():
    with pytest.raises(DegenerateParameter):
        classify_ra(0.0)
    with pytest.raises(ParameterTooLarge):
        classify_ra(0.5)


def test_ra_threshold_fields():
    rep = classify_ra(-0.0164)
    assert rep.thresholds["pole_threshold"] >= 20.0
    assert rep.thresholds["root_radius"] == 0.2
