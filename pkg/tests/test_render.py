import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from harmshear.render import NonFiniteSample, RenderError, RenderSpec, grid_curves, render_grid, sample_grid
from harmshear.shearing import half_plane_f3, harmonic_koebe

SVG = "{http://www.w3.org/2000/svg}"


def polylines(svg):
    root = ET.fromstring(svg)
    return root.findall(f".//{SVG}polyline")


def points(pl):
    pairs = [p.split(",") for p in pl.get("points").split()]
    return np.array([[float(x), float(y)] for x, y in pairs])


def test_curve_layout():
    spec = RenderSpec(rays=4, circles=3, samples_per_curve=64)
    curves = grid_curves(spec)
    kinds = [k for k, _ in curves]
    assert kinds == ["circle"] * 3 + ["ray"] * 4
    radii = [abs(c[0]) for k, c in curves if k == "circle"]
    assert radii == sorted(radii, reverse=True)
    first = curves[0][1]
    assert first[0] == pytest.approx(first[-1])


def test_svg_is_valid_and_counts_curves():
    spec = RenderSpec(rays=5, circles=4, samples_per_curve=64)
    svg = render_grid(lambda z: z, spec, title="id & <z>")
    assert svg.startswith("<?xml")
    pls = polylines(svg)
    assert len(pls) == 9
    assert "id &amp; &lt;z&gt;" in svg


def test_identity_render_coordinates_flip_y():
    spec = RenderSpec(rays=1, circles=1, samples_per_curve=64, r_max=0.5)
    pls = polylines(render_grid(lambda z: z, spec))
    ray = points(pls[1])
    assert np.allclose(ray[:, 1], 0)
    circle = points(pls[0])
    # quarter turn: z = 0.5i is drawn at y = -0.5
    assert circle[16] == pytest.approx([0, -0.5], abs=1e-5)


def test_half_plane_image():
    spec = RenderSpec()
    for _, w in sample_grid(half_plane_f3(), spec):
        assert np.all(w.real > -0.5 - 1e-6)
    svg = render_grid(half_plane_f3(), spec)
    xs = np.concatenate([points(p)[:, 0] for p in polylines(svg)])
    assert xs.min() > -0.5 - 1e-5  # 6 significant digits in the file


def test_deterministic_bytes():
    a = render_grid(harmonic_koebe(), RenderSpec(), title="K")
    b = render_grid(harmonic_koebe(), RenderSpec(), title="K")
    assert a == b
    assert not re.search(r"[ ,]-0[ ,\"]", a)


def test_non_finite_rejected():
    with pytest.raises(NonFiniteSample), np.errstate(divide="ignore", invalid="ignore"):
        render_grid(lambda z: 1 / (z - z), RenderSpec(samples_per_curve=64))


def test_spec_validation():
    with pytest.raises(RenderError):
        RenderSpec(r_max=1.0)
    with pytest.raises(RenderError):
        RenderSpec(samples_per_curve=10)
