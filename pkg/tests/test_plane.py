import json

import numpy as np
import pytest

from chdyn import (
    ENGINE_VERSION,
    McMullenParams,
    PlaneSpec,
    classify_ra,
    find_a_q,
    render_dynamical_plane,
    render_parameter_plane,
    write_csv,
    write_ppm,
    write_report,
)
from chdyn.lemmas import check_symmetry
from chdyn.plane import (
    CELL_UNRESOLVED,
    DYNAMICAL_CH,
    DYNAMICAL_MCMULLEN,
    PARAMETER_CH,
    PARAMETER_MCMULLEN,
    report_document,
)


def test_pixel_centers_geometry():
    spec = PlaneSpec(center=1 + 2j, width=4.0, nx=4, ny=2, kind=DYNAMICAL_CH, a=1.0)
    assert spec.height == 2.0
    z = spec.pixel_centers(0, 2)
    assert z.shape == (2, 4)
    # top-left pixel center
    assert abs(z[0, 0] - (1 - 4 / 2 + 4 / 8 + 1j * (2 + 1 - 0.5))) < 1e-14
    # x increases with column, y decreases with row
    assert z[0, 1].real > z[0, 0].real
    assert z[1, 0].imag < z[0, 0].imag
    # whole-grid centers symmetric around the center point
    full = spec.pixel_centers(0, spec.ny)
    assert abs(np.mean(full) - (1 + 2j)) < 1e-12


def test_spec_validation():
    with pytest.raises(ValueError):
        PlaneSpec(center=0j, width=0.0, nx=4, ny=4, kind=DYNAMICAL_CH)
    with pytest.raises(ValueError):
        PlaneSpec(center=0j, width=1.0, nx=0, ny=4, kind=DYNAMICAL_CH)


def test_dynamical_ch_render_basins():
    spec = PlaneSpec(center=0j, width=4.0, nx=24, ny=24, kind=DYNAMICAL_CH, a=3.0, max_iter=60)
    grid = render_dynamical_plane(spec)
    # Halley parameter: almost all sampled points find a root
    assert np.mean(grid.classes >= 0) > 0.9
    assert set(np.unique(grid.classes[grid.classes >= 0])) == {0, 1, 2}
    # points very near a root resolve to that root quickly
    spec1 = PlaneSpec(center=1.001 + 0j, width=1e-4, nx=1, ny=1, kind=DYNAMICAL_CH, a=3.0)
    g1 = render_dynamical_plane(spec1)
    assert g1.classes[0, 0] == 0
    assert g1.iters[0, 0] <= 3


def test_dynamical_mcm_render():
    spec = PlaneSpec(
        center=0j, width=4.0, nx=16, ny=16, kind=DYNAMICAL_MCMULLEN,
        mcm=McMullenParams(4, 2, -0.455), max_iter=60,
    )
    grid = render_dynamical_plane(spec)
    assert np.all(grid.classes[0, :] == 0)  # far-out row escapes
    assert np.all(grid.iters[grid.classes == 0] >= 1)
    with pytest.raises(ValueError):
        render_parameter_plane(spec)


def test_parameter_render_matches_pointwise():
    spec = PlaneSpec(center=-0.015 + 0j, width=0.02, nx=6, ny=6, kind=PARAMETER_CH, max_iter=100)
    grid = render_parameter_plane(spec)
    z = spec.pixel_centers(0, 6)
    codes = {"Cantor": 0, "CantorCircles": 1, "Sierpinski": 2, "Unresolved": CELL_UNRESOLVED}
    for j in (0, 3, 5):
        for i in (0, 2, 5):
            rep = classify_ra(complex(z[j, i]), max_iter=100)
            assert grid.classes[j, i] == codes[rep.julia_class.value]
    with pytest.raises(ValueError):
        render_dynamical_plane(spec)


def test_parameter_mcmullen_render():
    spec = PlaneSpec(center=-0.2 + 0j, width=0.6, nx=8, ny=8, kind=PARAMETER_MCMULLEN, max_iter=100)
    grid = render_parameter_plane(spec)
    assert (grid.classes >= 0).any()


def test_worker_determinism(tmp_path):
    spec = PlaneSpec(center=0j, width=3.0, nx=32, ny=32, kind=DYNAMICAL_CH, a=1.0, max_iter=40)
    g1 = render_dynamical_plane(spec, workers=1)
    g3 = render_dynamical_plane(spec, workers=3)
    assert np.array_equal(g1.classes, g3.classes)
    assert np.array_equal(g1.iters, g3.iters)
    p1, p3 = tmp_path / "a.ppm", tmp_path / "b.ppm"
    write_ppm(g1, p1)
    write_ppm(g3, p3)
    assert p1.read_bytes() == p3.read_bytes()


def test_ppm_format(tmp_path):
    spec = PlaneSpec(center=0j, width=3.0, nx=5, ny=4, kind=DYNAMICAL_CH, a=1.0, max_iter=30)
    grid = render_dynamical_plane(spec)
    path = tmp_path / "img.ppm"
    write_ppm(grid, path)
    raw = path.read_bytes()
    assert raw.startswith(b"P6\n5 4\n255\n")
    assert len(raw) == len(b"P6\n5 4\n255\n") + 5 * 4 * 3


def test_csv_format(tmp_path):
    spec = PlaneSpec(center=0j, width=2.0, nx=3, ny=2, kind=DYNAMICAL_CH, a=1.0, max_iter=20)
    grid = render_dynamical_plane(spec)
    path = tmp_path / "cells.csv"
    write_csv(grid, path)
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "i,j,re,im,class,iter"
    assert len(lines) == 1 + 3 * 2
    i, j, re, im, cls, it = lines[1].split(",")
    assert (i, j) == ("0", "0")
    z = spec.pixel_centers(0, 1)[0, 0]
    assert abs(float(re) - z.real) < 1e-15
    assert abs(float(im) - z.imag) < 1e-15


def test_report_documents(tmp_path):
    rep = classify_ra(-0.0164)
    doc = report_document(rep)
    assert list(doc) == ["kind", "params", "class", "m", "events", "thresholds", "engine_version"]
    assert doc["class"] == "Sierpinski"
    assert doc["engine_version"] == ENGINE_VERSION
    path = tmp_path / "rep.json"
    write_report(rep, path)
    parsed = json.loads(path.read_text())
    assert parsed["class"] == "Sierpinski"
    assert parsed["m"] == 3
    re, im = (float(t) for t in parsed["params"]["a"].split(","))
    assert (re, im) == (-0.0164, 0.0)

    res = find_a_q()
    doc = report_document(res)
    assert list(doc) == ["kind", "params", "value", "residual", "events", "thresholds", "engine_version"]
    write_report(res, path)
    parsed = json.loads(path.read_text())
    assert parsed["kind"] == "a_q"
    assert parsed["residual"] <= 1e-10

    lem = check_symmetry(0.5)
    doc = report_document(lem)
    assert doc["kind"] == "lemma:symmetry"
    assert doc["class"] == "pass"
    write_report(lem, path)
    assert json.loads(path.read_text())["class"] == "pass"
