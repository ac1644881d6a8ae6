"""Drive every acceptance criterion through the command line only.

Each criterion is one or more ``harmshear`` invocations with an expected exit
status; one PASS/FAIL line is printed per criterion.

    python3 scripts/acceptance_cli.py [--quick]
"""

from __future__ import annotations

import argparse
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

HK_NUM = [0, 1, -0.5, 1 / 6]  # harmonic Koebe parts over (1 - z)^3
GK_NUM = [0, 0, 0.5, 1 / 6]
CUBE = "[1,-3,3,-1]"


def affine_koebe(b1: complex) -> str:
    """``harmonic`` spec for K + b1 conj(K)."""
    fmt = lambda c: ",".join(repr(complex(x)).strip("()") for x in c)  # noqa: E731
    h = [x + b1 * y for x, y in zip(HK_NUM, GK_NUM)]
    g = [y + b1.conjugate() * x for x, y in zip(HK_NUM, GK_NUM)]
    return f"harmonic h=[{fmt(h)}]/{CUBE} g=[{fmt(g)}]/{CUBE}"


@dataclass
class Criterion:
    num: int
    title: str
    calls: list = field(default_factory=list)  # (argv, expected exit code)


def criteria(tmp: Path, quick: bool):
    M = "1000" if quick else "4000"
    count = "20" if quick else "100"
    return [
        Criterion(1, "shear reproduces harmonic Koebe", [
            (["verify", "bounds", "--fn", "shear phi=koebe omega=[0,1]", "--order", "30"], 0)]),
        Criterion(2, "half-plane map and f4", [
            (["verify", "bounds", "--fn", "shear phi=koebe omega=[0,-1]", "--class", "CH0C", "--order", "30"], 0),
            (["verify", "bounds", "--fn", "shear phi=koebe omega=[0,0,1]", "--order", "30"], 0)]),
        Criterion(3, "proof chain", [(["verify", "chain", "--count", count], 0)]),
        Criterion(4, "Koebe slice formula", [(["verify", "slice"], 0)]),
        Criterion(5, "growth", [(["verify", "growth", "--fn", fn], 0) for fn in ("K", "f3", "f4")]),
        Criterion(6, "Jacobian and derivative", [
            (["verify", chk, "--fn", fn], 0)
            for chk in ("jacobian", "derivative")
            for fn in ("K", "f3", "f4", affine_koebe(0.3), affine_koebe(0.5j))]),
        Criterion(7, "curvature", [(["verify", "curvature", "--fn", "K"], 0), (["radius", "--fn", "K"], 0)]),
        Criterion(8, "specialised constants", [(["verify", "constants"], 0)]),
        Criterion(9, "f_a convexity and Alexander transform", [
            (["stability", "--fn", "f_a_lambda(a=1+sqrt(2), lambda=1)", "--mode", "convex", "--lambdas", "32"], 0),
            (["verify", "alexander", "--fn", "f_a_lambda(a=1+sqrt(2), lambda=i)"], 0)]),
        Criterion(10, "theta search and folding map", [
            (["theta-search", "--fn", "harmonic_koebe", "--grid", "360", "--samples", M], 0),
            (["theta-search", "--fn", "f4", "--grid", "360", "--samples", M], 0),
            (["theta-search", "--fn", "f1(n=3)", "--grid", "360", "--samples", M], 0),
            (["verify", "local", "--fn", "harmonic h=[0,1,1] g=[0,0,1]"], 1)]),
        Criterion(11, "renderer", [
            (["render", "--fn", "f3", "--out", str(tmp / "a.svg")], 0),
            (["render", "--fn", "f3", "--out", str(tmp / "b.svg")], 0)]),
    ]


def harmshear(argv):
    return subprocess.run([sys.executable, "-m", "harmshear.cli", *argv], capture_output=True, text=True)


def extra_checks(c: Criterion, outputs, tmp: Path) -> str | None:
    """Output inspections beyond exit codes; returns a failure reason or None."""
    if c.num == 10:
        for out in outputs[:2]:
            lines = out.strip().splitlines()
            if len(lines) != 1 or not lines[0].startswith("theta = π"):
                return "expected only the pi cell"
        if len(outputs[2].strip().splitlines()) != 360:
            return "f1(3) should keep all 360 cells"
    if c.num == 11:
        a, b = (tmp / "a.svg").read_bytes(), (tmp / "b.svg").read_bytes()
        if a != b:
            return "renders differ"
        root = ET.fromstring(a)
        xs = [float(p.split(",")[0]) for pl in root.iter("{http://www.w3.org/2000/svg}polyline")
              for p in pl.get("points").split()]
        if min(xs) <= -0.5 - 1e-5:
            return f"image reaches Re = {min(xs)}"
    return None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="smaller sample counts")
    args = ap.parse_args(argv)
    all_ok = True
    with tempfile.TemporaryDirectory() as d:
        tmp = Path(d)
        for c in criteria(tmp, args.quick):
            outputs, reason = [], None
            for argv_, want in c.calls:
                res = harmshear(argv_)
                outputs.append(res.stdout)
                if res.returncode != want:
                    reason = f"`{' '.join(argv_)}` exited {res.returncode}, expected {want}: {res.stderr.strip()[:200]}"
                    break
            reason = reason or extra_checks(c, outputs, tmp)
            all_ok &= reason is None
            print(f"criterion {c.num:2d} {'PASS' if reason is None else 'FAIL'}  {c.title}" + (f": {reason}" if reason else ""))
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
