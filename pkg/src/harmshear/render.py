"""Deterministic SVG pictures of disk images: circles and radial segments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


class RenderError(ValueError):
    pass


class NonFiniteSample(RenderError):
    pass


@dataclass(frozen=True)
class RenderSpec:
    rays: int = 16
    circles: int = 8
    samples_per_curve: int = 512
    r_max: float = 0.95
    width: int = 600
    height: int = 600
    circle_stroke: str = "#1f4e9c"
    ray_stroke: str = "#b23a1e"
    stroke_width: float = 1.0

    def __post_init__(self):
        if self.rays < 1 or self.circles < 1:
            raise RenderError("need at least one ray and one circle")
        if self.samples_per_curve < 64:
            raise RenderError("samples_per_curve must be at least 64")
        if not 0 < self.r_max < 1:
            raise RenderError(f"r_max must lie in (0, 1), got {self.r_max}")


def grid_curves(spec: RenderSpec):
    """Preimage curves in drawing order: circles outermost first, then rays by angle."""
    s = spec.samples_per_curve
    t = 2 * np.pi * np.arange(s + 1) / s  # closed: last point repeats the first
    curves = []
    for j in range(spec.circles, 0, -1):
        r = j * spec.r_max / spec.circles
        curves.append(("circle", r * np.exp(1j * t)))
    rr = spec.r_max * np.arange(s) / (s - 1)
    for k in range(spec.rays):
        curves.append(("ray", rr * np.exp(2j * np.pi * k / spec.rays)))
    return curves


def sample_grid(f: Callable, spec: RenderSpec = RenderSpec()):
    """Image polylines ``[(kind, points)]`` of the grid under ``f``."""
    out = []
    for kind, z in grid_curves(spec):
        w = np.asarray(f(z), dtype=complex)
        if not np.all(np.isfinite(w)):
            bad = z[~np.isfinite(w)][0]
            raise NonFiniteSample(f"non-finite image at z = {complex(bad):.6g}")
        out.append((kind, w))
    return out


def _fmt(x: float) -> str:
    s = f"{x:.6g}"
    return "0" if s == "-0" else s


def render_grid(f: Callable, spec: RenderSpec = RenderSpec(), title: str = "") -> str:
    """SVG 1.1 document showing the image of the polar grid under ``f``."""
    curves = sample_grid(f, spec)
    pts = np.concatenate([w for _, w in curves])
    x0, x1 = pts.real.min(), pts.real.max()
    y0, y1 = (-pts.imag).min(), (-pts.imag).max()
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = 0.05 * span
    vb = (x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    sw = spec.stroke_width * max(vb[2], vb[3]) / max(spec.width, spec.height)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" height="{spec.height}" '
        f'viewBox="{" ".join(_fmt(v) for v in vb)}" preserveAspectRatio="xMidYMid meet">',
    ]
    if title:
        lines.append(f"<title>{_escape(title)}</title>")
    lines.append(f'<g fill="none" stroke-width="{_fmt(sw)}" stroke-linejoin="round">')
    for kind, w in curves:
        colour = spec.circle_stroke if kind == "circle" else spec.ray_stroke
        coords = " ".join(f"{_fmt(p.real)},{_fmt(-p.imag)}" for p in w)
        lines.append(f'<polyline class="{kind}" stroke="{colour}" points="{coords}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
