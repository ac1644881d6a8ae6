"""Render the SVG figure set: images of the polar grid for the example maps and their slices.

    python3 scripts/render_figures.py --out figures/
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass, field
from pathlib import Path

from harmshear.mapcore import slice_map
from harmshear.render import RenderSpec, render_grid
from harmshear.shearing import F_a_lambda, catalog, f2, f4, f_a_lambda, half_plane_f3


@dataclass(frozen=True)
class Figure:
    name: str
    build: object  # zero-argument callable returning a map
    slice_theta: float | None = None


@dataclass
class FigureConfig:
    out: Path = Path("figures")
    render: RenderSpec = field(default_factory=RenderSpec)
    a_small: float = 1 + math.sqrt(2)
    a_large: float = 5.0


def figures(cfg: FigureConfig):
    a, b = cfg.a_small, cfg.a_large
    return [
        Figure("f2_n3_alpha0.2", lambda: f2(0.2, 3)),
        Figure("f2_n3_alpha0.2_slice_pi", lambda: f2(0.2, 3), math.pi),
        Figure("f3_half_plane", half_plane_f3),
        Figure("f3_slice_0", half_plane_f3, 0.0),
        Figure("f4", f4),
        Figure("f4_slice_pi", f4, math.pi),
        Figure("koebe", lambda: catalog("harmonic_koebe")),
        Figure("koebe_slice_pi", lambda: catalog("harmonic_koebe"), math.pi),
        Figure("f_a1_lambda1", lambda: f_a_lambda(a, 1)),
        Figure("F_a1_lambda1", lambda: F_a_lambda(a, 1)),
        Figure("f_a5_lambda_i", lambda: f_a_lambda(b, 1j)),
        Figure("F_a5_lambda_i", lambda: F_a_lambda(b, 1j)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=FigureConfig.out)
    ap.add_argument("--samples-per-curve", type=int, default=RenderSpec.samples_per_curve)
    args = ap.parse_args(argv)
    cfg = FigureConfig(out=args.out, render=RenderSpec(samples_per_curve=args.samples_per_curve))
    cfg.out.mkdir(parents=True, exist_ok=True)
    for fig in figures(cfg):
        f = fig.build()
        if fig.slice_theta is not None:
            f = slice_map(f, complex(math.cos(fig.slice_theta), math.sin(fig.slice_theta)))
        path = cfg.out / f"{fig.name}.svg"
        path.write_text(render_grid(f, cfg.render, title=fig.name))
        print(path)


if __name__ == "__main__":
    main()
