"""Numerical checks of coefficient, growth, Jacobian, derivative and curvature bounds.

Every check returns a :class:`Report`.  Margins are signed and relative,
``(bound - value) / max(1, |bound|)``, so a check passes when its worst margin
is at least ``-tol``.  Sampled geometric checks (univalence, convexity) give
necessary evidence only; a pass means "no counterexample found on the grid".
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable

import numpy as np
from scipy.spatial import cKDTree

from .mapcore import SHS_CONSTANTS, FamilyConstants, HarmonicMap, jacobian, slice, slice_map
from .powerseries import EPS_DIV, Series
from .shearing import polar_grid

REPORT_SCHEMA = 1


class VerifyError(ValueError):
    pass


class OrderTooLow(VerifyError):
    pass


class NotNormalized(VerifyError):
    pass


class StationaryPoint(VerifyError):
    pass


class NeverConvex(VerifyError):
    pass


@dataclass(frozen=True)
class Tolerances:
    coeff: float = 1e-9
    pointwise: float = 1e-9
    geometry: float = 1e-6
    subordination: float = 1e-10
    collision_delta: float = 1e-4

    @classmethod
    def from_dict(cls, d: dict) -> "Tolerances":
        known = {k: float(v) for k, v in d.items() if k in cls.__dataclass_fields__}
        return cls(**known)


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class GridSpec:
    """Polar product grid ``r_i = r_max * i / radii`` (i = 1..radii) times ``angles`` angles."""

    radii: int = 32
    angles: int = 128
    r_max: float = 0.95

    def __post_init__(self):
        if not 0 < self.r_max <= 0.999:
            raise VerifyError(f"grid r_max must lie in (0, 0.999], got {self.r_max}")
        if self.radii < 1 or self.angles < 1:
            raise VerifyError("grid needs at least one radius and one angle")

    def points(self) -> np.ndarray:
        return polar_grid(self.radii, self.angles, self.r_max)


DEFAULT_GRID = GridSpec()
FINE_GRID = GridSpec(64, 256, 0.999)


@dataclass
class Report:
    check_name: str
    passed: bool
    worst_margin: float
    witness: Any
    details: Any = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"schema": REPORT_SCHEMA, **asdict(self)}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), default=_json_default, **kw)

    def __bool__(self):
        return self.passed


def _json_default(o):
    if isinstance(o, complex) or np.iscomplexobj(o):
        o = complex(o)
        return [o.real, o.imag]
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def rel_margin(bound, value):
    bound = np.asarray(bound, dtype=float)
    return (bound - value) / np.maximum(1.0, np.abs(bound))


def _worst(margins: np.ndarray, z: np.ndarray):
    i = np.unravel_index(np.argmin(margins), margins.shape)
    return float(margins[i]), complex(z[i])


def _finish(name, blocks, tol, **extra) -> Report:
    """Combine per-bound ``(label, margin, witness)`` blocks into one report."""
    worst = min(blocks, key=lambda b: b[1])
    details = {"tolerance": tol, "bounds": [{"bound": b[0], "worst_margin": b[1], "witness": b[2]} for b in blocks]}
    details.update(extra)
    return Report(name, worst[1] >= -tol, worst[1], {"bound": worst[0], "z": worst[2]}, details)


# -- coefficients ------------------------------------------------------------

COEFF_CLASSES = {
    "SH0S": "univalent slice, b1 = 0",
    "CH0C": "convex slice, b1 = 0",
    "SHS": "affine hull of SH0S",
    "CHC": "affine hull of CH0C",
}


def coefficient_bounds(n: int, cls: str):
    """(bound on |a_n|, bound on |b_n|, bound on ||a_n| - |b_n|| or None)."""
    if cls == "SH0S":
        return (n + 1) * (2 * n + 1) / 6, (n - 1) * (2 * n - 1) / 6, float(n)
    if cls == "CH0C":
        return (n + 1) / 2, (n - 1) / 2, None
    if cls == "SHS":
        v = (2 * n * n + 1) / 3
        return v, v, None
    if cls == "CHC":
        return float(n), float(n), None
    raise VerifyError(f"unknown coefficient class {cls!r}; expected one of {sorted(COEFF_CLASSES)}")


def check_coeff_bounds(f: HarmonicMap, N: int, cls: str = "SH0S", tol: float = DEFAULT_TOL.coeff) -> Report:
    if f.order < N:
        raise OrderTooLow(f"map has order {f.order}, need at least {N}")
    items = []
    for n in range(2, N + 1):
        A, B, D = coefficient_bounds(n, cls)
        a, b = abs(f.a(n)), abs(f.b(n))
        rec = {"n": n, "abs_a": a, "abs_b": b, "margin_a": float(rel_margin(A, a)), "margin_b": float(rel_margin(B, b))}
        if D is not None:
            rec["margin_diff"] = float(rel_margin(D, abs(a - b)))
        items.append(rec)
    worst, where = math.inf, None
    for rec in items:
        for key in ("margin_a", "margin_b", "margin_diff"):
            if key in rec and rec[key] < worst:
                worst, where = rec[key], {"n": rec["n"], "quantity": key[len("margin_"):]}
    return Report(f"coeff_bounds[{cls}]", worst >= -tol, worst, where, {"class": cls, "tolerance": tol, "items": items})


# -- proof chain -------------------------------------------------------------

def subordination_coeffs(omega: Series, eps: complex) -> Series:
    """Series of ``omega / (1 + eps omega)``."""
    if abs(omega.coeffs[0]) > EPS_DIV:
        raise VerifyError("subordination coefficients need omega(0) = 0")
    return omega * (1 + complex(eps) * omega).recip()


def subordination_report(omega: Series, eps: complex, tol: float = DEFAULT_TOL.subordination) -> Report:
    w = subordination_coeffs(omega, eps)
    mags = np.abs(w.coeffs[1:])
    margins = 1.0 - mags
    i = int(np.argmin(margins)) if margins.size else 0
    worst = float(margins[i]) if margins.size else 1.0
    return Report("subordination", worst >= -tol, worst, {"n": i + 1}, {"abs_coeffs": mags.tolist(), "tolerance": tol})


def convolution_bn(phi: Series, omega: Series, eps: complex, n: int) -> complex:
    """``b_n`` rebuilt from ``phi'`` and the coefficients of ``omega/(1 + eps omega)``."""
    if n < 2:
        raise VerifyError("convolution formula needs n >= 2")
    w = subordination_coeffs(omega, eps).coeffs
    total = 0j
    for k in range(n - 1):
        total += (k + 1) * phi.coeffs[k + 1] * w[n - 1 - k]
    return total / n


def proof_chain_bound(phi: Series, n: int) -> float:
    """``(1/n) sum_{k<=n-2} (k+1)|phi_{k+1}|``, the bound on |b_n| before de Branges."""
    return sum((k + 1) * abs(phi.coeffs[k + 1]) for k in range(n - 1)) / n


# -- pointwise bounds --------------------------------------------------------

def growth_bounds(r, c: FamilyConstants = SHS_CONSTANTS):
    a = float(c.growth_exponent)
    r = np.asarray(r, dtype=float)
    q = (1 - r) / (1 + r)
    return (1 - q ** a) / (2 * a), (q ** -a - 1) / (2 * a)


def jacobian_bounds(r, b1: complex, c: FamilyConstants = SHS_CONSTANTS):
    lo_e, hi_e = (float(e) for e in c.jacobian_exponents)
    r = np.asarray(r, dtype=float)
    s = 1 - abs(b1) ** 2
    return s * (1 - r) ** lo_e / (1 + r) ** hi_e, s * (1 + r) ** lo_e / (1 - r) ** hi_e


def derivative_bounds(r, b1: complex, c: FamilyConstants = SHS_CONSTANTS):
    lo_e, hi_e = (float(e) for e in c.derivative_exponents)
    r = np.asarray(r, dtype=float)
    base = (1 + r) ** lo_e / (1 - r) ** hi_e
    return (1 + r * abs(b1)) * base, (r + abs(b1)) * base


def curvature_bounds(r, b1: complex, c: FamilyConstants = SHS_CONSTANTS):
    """(lower, upper) curvature bounds for the image of ``|z| = r``."""
    e = float(c.curvature_exponent)
    s = float(c.curvature_coefficient)
    b = abs(b1)
    r = np.asarray(r, dtype=float)
    big = (1 + b) / (1 - b) ** 2 * ((1 + r) / (1 - r)) ** e
    small = (1 - b) / (1 + b) ** 2 * ((1 - r) / (1 + r)) ** e
    upper = big * (r * r + s * r + 1) / r
    quad = (r * r - s * r + 1) / r
    lower = np.where(r <= c.rho, small * quad, big * quad)
    return lower, upper


def _radius(z):
    return np.abs(z)


def growth_check(f: HarmonicMap, grid: GridSpec = DEFAULT_GRID, constants: FamilyConstants = SHS_CONSTANTS,
                 tol: float = DEFAULT_TOL.pointwise) -> Report:
    if not f.is_normalized(1e-9) or abs(f.b1) > 1e-9:
        raise NotNormalized("growth bounds apply to normalised maps with b1 = 0")
    z = grid.points()
    r = _radius(z)
    val = np.abs(f(z))
    lo, hi = growth_bounds(r, constants)
    blocks = [("lower", *_worst(rel_margin(val, lo), z)), ("upper", *_worst(rel_margin(hi, val), z))]
    return _finish("growth", blocks, tol, alpha=constants.alpha, grid=asdict(grid))


def jacobian_bounds_check(f: HarmonicMap, grid: GridSpec = DEFAULT_GRID, constants: FamilyConstants = SHS_CONSTANTS,
                          tol: float = DEFAULT_TOL.pointwise) -> Report:
    z = grid.points()
    r = _radius(z)
    J = jacobian(f, z)
    lo, hi = jacobian_bounds(r, f.b1, constants)
    blocks = [("lower", *_worst(rel_margin(J, lo), z)), ("upper", *_worst(rel_margin(hi, J), z))]
    return _finish("jacobian", blocks, tol, b1=f.b1, exponents=constants.jacobian_exponents, grid=asdict(grid))


def derivative_bounds_check(f: HarmonicMap, grid: GridSpec = DEFAULT_GRID, constants: FamilyConstants = SHS_CONSTANTS,
                            tol: float = DEFAULT_TOL.pointwise) -> Report:
    z = grid.points()
    r = _radius(z)
    hb, gb = derivative_bounds(r, f.b1, constants)
    blocks = [
        ("|h'|", *_worst(rel_margin(hb, np.abs(f.dh(z, 1))), z)),
        ("|g'|", *_worst(rel_margin(gb, np.abs(f.dg(z, 1))), z)),
    ]
    return _finish("derivative", blocks, tol, b1=f.b1, exponents=constants.derivative_exponents, grid=asdict(grid))


# -- curvature ---------------------------------------------------------------

def curvature_at(f: HarmonicMap, r: float, t):
    """Curvature of the image of ``|z| = r`` at parameter ``t`` (vectorised in t)."""
    t = np.asarray(t, dtype=float)
    z = r * np.exp(1j * t)
    h1, h2 = np.asarray(f.dh(z, 1)), np.asarray(f.dh(z, 2))
    g1, g2 = np.asarray(f.dg(z, 1)), np.asarray(f.dg(z, 2))
    d1 = 1j * z * h1 + np.conj(1j * z * g1)
    d2 = -(z * h1 + z * z * h2) - np.conj(z * g1 + z * z * g2)
    speed = np.abs(d1)
    if np.any(speed <= EPS_DIV):
        bad = t.reshape(-1)[np.argmin(speed.reshape(-1))]
        raise StationaryPoint(f"image curve is stationary at r = {r}, t = {bad:.6g}")
    k = np.imag(np.conj(d1) * d2) / speed ** 3
    return float(k) if k.ndim == 0 else k


def curvature_bounds_check(f: HarmonicMap, radii, angles: int = 512, constants: FamilyConstants = SHS_CONSTANTS,
                           tol: float = DEFAULT_TOL.pointwise) -> Report:
    t = 2 * np.pi * np.arange(angles) / angles
    items = []
    worst, witness = math.inf, None
    for r in radii:
        if not 0 < r < 1:
            raise VerifyError(f"curvature radii must lie in (0, 1), got {r}")
        k = curvature_at(f, r, t)
        lo, hi = curvature_bounds(r, f.b1, constants)
        m_lo = rel_margin(k, lo)
        m_hi = rel_margin(hi, k)
        i_lo, i_hi = int(np.argmin(m_lo)), int(np.argmin(m_hi))
        rec = {
            "r": float(r), "lower": float(lo), "upper": float(hi),
            "min_curvature": float(k.min()), "max_curvature": float(k.max()),
            "margin_lower": float(m_lo[i_lo]), "margin_upper": float(m_hi[i_hi]),
        }
        items.append(rec)
        for m, i, side in ((m_lo[i_lo], i_lo, "lower"), (m_hi[i_hi], i_hi, "upper")):
            if m < worst:
                worst, witness = float(m), {"r": float(r), "t": float(t[i]), "bound": side}
    return Report("curvature", worst >= -tol, worst, witness,
                  {"rho": constants.rho, "angles": angles, "tolerance": tol, "items": items})


def min_curvature(f: HarmonicMap, r: float, angles: int) -> tuple[float, float]:
    t = 2 * np.pi * np.arange(angles) / angles
    k = curvature_at(f, r, t)
    i = int(np.argmin(k))
    return float(k[i]), float(t[i])


def radius_of_convexity(f: HarmonicMap, angles: int = 512, tol: float = DEFAULT_TOL.geometry,
                        r_lo: float = 1e-3, r_hi: float = 0.999, steps: int = 200, rtol: float = 1e-7) -> float:
    """Largest sampled radius below the first loss of convexity of the circle images.

    The minimum curvature is scanned on ``steps`` radii from ``r_lo`` to
    ``r_hi``; the first bracket where it drops below ``-tol`` is then bisected.
    """
    def convex(r):
        return min_curvature(f, r, angles)[0] >= -tol

    if not convex(r_lo):
        raise NeverConvex(f"image of |z| = {r_lo} is already non-convex")
    radii = np.linspace(r_lo, r_hi, steps)
    prev = r_lo
    for r in radii[1:]:
        if not convex(r):
            lo, hi = prev, float(r)
            while hi - lo > rtol:
                mid = 0.5 * (lo + hi)
                if convex(mid):
                    lo = mid
                else:
                    hi = mid
            return lo
        prev = float(r)
    return r_hi


# -- univalence ----------------------------------------------------------------

def univalence_grid(r_max: float, M: int) -> np.ndarray:
    """Deterministic polar grid of about M points, shape (radii, angles)."""
    n_r = max(1, int(round(math.sqrt(M / 8))))
    n_t = max(3, M // n_r)
    return polar_grid(n_r, n_t, r_max)


def _pairs_bruteforce(z: np.ndarray, w: np.ndarray, cap: float):
    """Every pair with ``|w_i - w_j| / |z_i - z_j| < cap``, as (i, j, ratio)."""
    out = []
    for i in range(z.size - 1):
        dz = np.abs(z[i + 1 :] - z[i])
        ratio = np.abs(w[i + 1 :] - w[i]) / dz
        hit = np.nonzero(ratio < cap)[0]
        out.extend((i, i + 1 + j, float(ratio[j])) for j in hit)
    return out


def _pairs_kdtree(z: np.ndarray, w: np.ndarray, cap: float):
    # |z_i - z_j| <= 2 r_max, so only image pairs closer than 2 r_max cap can qualify
    reach = cap * 2 * float(np.max(np.abs(z)))
    tree = cKDTree(np.column_stack([w.real, w.imag]))
    cand = tree.query_pairs(reach, output_type="ndarray")
    if cand.size == 0:
        return []
    i, j = cand[:, 0], cand[:, 1]
    ratio = np.abs(w[i] - w[j]) / np.abs(z[i] - z[j])
    keep = ratio < cap
    return sorted((int(a), int(b), float(c)) for a, b, c in zip(np.minimum(i, j)[keep], np.maximum(i, j)[keep], ratio[keep]))


def _segment_crossings(v: np.ndarray):
    """Proper crossings between non-adjacent edges of the closed polygon ``v``."""
    a = v
    b = np.roll(v, -1)
    n = v.size
    i, j = np.triu_indices(n, k=2)
    keep = ~((i == 0) & (j == n - 1))
    i, j = i[keep], j[keep]

    def orient(p, q, r):
        return np.imag(np.conj(q - p) * (r - p))

    o1 = orient(a[i], b[i], a[j])
    o2 = orient(a[i], b[i], b[j])
    o3 = orient(a[j], b[j], a[i])
    o4 = orient(a[j], b[j], b[i])
    hit = (o1 * o2 < 0) & (o3 * o4 < 0)
    return i[hit], j[hit]


def univalence_sample_check(fmap: Callable, r_max: float = 0.98, M: int = 4000, delta: float = DEFAULT_TOL.collision_delta,
                            method: str = "kdtree") -> Report:
    """Sampled search for non-injectivity of ``fmap`` on ``|z| <= r_max``.

    Two witnesses are looked for: grid pairs with ``|f(z1) - f(z2)| <
    delta |z1 - z2|``, and self-crossings of the image of a sampled circle (a
    map that is injective on a closed disk sends its boundary circle to a
    Jordan curve).  ``worst_margin`` is ``min over pairs of min(ratio, 10
    delta) - delta``, or ``-1`` when a circle image crosses itself.
    """
    zg = univalence_grid(r_max, M)
    wg = np.asarray(fmap(zg), dtype=complex)
    if not np.all(np.isfinite(wg)):
        raise VerifyError("map produced non-finite values on the sampling grid")
    z, w = zg.reshape(-1), wg.reshape(-1)
    cap = 10 * delta
    pairs = (_pairs_kdtree if method == "kdtree" else _pairs_bruteforce)(z, w, cap)
    collisions = [p for p in pairs if p[2] < delta]
    pair_margin = (min(p[2] for p in pairs) if pairs else cap) - delta

    crossings = []
    for row in range(zg.shape[0]):
        i, j = _segment_crossings(wg[row])
        if i.size:
            crossings.append({"r": float(abs(zg[row, 0])), "count": int(i.size),
                              "z1": complex(zg[row, i[0]]), "z2": complex(zg[row, j[0]])})

    margin = pair_margin
    witness: Any = None
    if pairs:
        p = min(pairs, key=lambda q: q[2])
        witness = {"z1": complex(z[p[0]]), "z2": complex(z[p[1]]), "ratio": p[2]}
    if crossings:
        margin = -1.0
        witness = {"crossing": crossings[-1]}
    if witness is None:
        witness = {"z1": complex(z[0]), "z2": complex(z[1])}
    passed = not collisions and not crossings
    details = {
        "result": "no collision found" if passed else "collision found",
        "grid": list(zg.shape), "r_max": r_max, "delta": delta,
        "collisions": [{"z1": complex(z[a]), "z2": complex(z[b]), "ratio": c} for a, b, c in collisions[:20]],
        "n_collisions": len(collisions), "circle_crossings": crossings,
    }
    return Report("univalence_sample", passed, float(margin), witness, details)


def local_univalence_check(f: HarmonicMap, grid: GridSpec = FINE_GRID) -> Report:
    """Sign of the Jacobian on a grid.

    The margin is ``J / (|h'|^2 + |g'|^2)`` in [-1, 1]; it has the sign of
    ``J`` and reaches -1 exactly at critical points of ``h``, which is where
    the witness lands for maps that fold.
    """
    z = grid.points()
    hp2 = np.abs(np.asarray(f.dh(z, 1))) ** 2
    gp2 = np.abs(np.asarray(f.dg(z, 1))) ** 2
    J = hp2 - gp2
    norm = np.where(hp2 + gp2 > 0, J / np.maximum(hp2 + gp2, np.finfo(float).tiny), -1.0)
    worst, where = _worst(norm, z)
    i = np.unravel_index(np.argmin(J), J.shape)
    return Report("local_univalence", bool(np.min(J) > 0), worst, {"z": where},
                  {"min_jacobian": float(J[i]), "min_jacobian_at": complex(z[i]), "grid": asdict(grid)})


def certify_sense_preserving(f: HarmonicMap, grid: GridSpec = FINE_GRID) -> HarmonicMap:
    rep = local_univalence_check(f, grid)
    if not rep.passed:
        raise VerifyError(f"Jacobian is not positive on the grid (witness {rep.witness})")
    return replace(f, sense_preserving=True)


# -- slices ------------------------------------------------------------------

def convexity_functional(f: HarmonicMap, z):
    """``Re(1 + z h''/h')`` of the analytic part."""
    return np.real(1 + z * np.asarray(f.dh(z, 2)) / np.asarray(f.dh(z, 1)))


def _map_jobs(fn, items, jobs):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def stability_scan(f: HarmonicMap, lam_count: int = 16, mode: str = "univalent", grid: GridSpec = FINE_GRID,
                   r_max: float = 0.98, M: int = 4000, tol: Tolerances = DEFAULT_TOL, jobs: int = 1) -> Report:
    """Check every slice ``h + lam g`` for ``lam = exp(2 pi i j / lam_count)``."""
    if lam_count < 8:
        raise VerifyError("stability scan needs at least 8 values of lambda")
    if mode not in ("univalent", "convex"):
        raise VerifyError(f"unknown stability mode {mode!r}")
    lams = np.exp(2j * np.pi * np.arange(lam_count) / lam_count)
    z = grid.points()

    def one(lam):
        s = slice_map(f, lam)
        if mode == "convex":
            val = convexity_functional(s, z)
            m, where = _worst(val, z)
            return {"lambda": complex(lam), "passed": m >= -tol.pointwise, "margin": m, "witness": where}
        rep = univalence_sample_check(s, r_max, M, tol.collision_delta)
        return {"lambda": complex(lam), "passed": rep.passed, "margin": rep.worst_margin, "witness": rep.witness}

    items = _map_jobs(one, lams, jobs)
    worst = min(items, key=lambda d: d["margin"])
    survivors = [d["lambda"] for d in items if d["passed"]]
    return Report(f"stability[{mode}]", all(d["passed"] for d in items), float(worst["margin"]),
                  {"lambda": worst["lambda"], "at": worst["witness"]}, {"items": items, "survivors": survivors})


def de_branges_filter(s: Series, N: int, tol: float = DEFAULT_TOL.coeff) -> tuple[bool, int | None]:
    """``|c_n| <= n`` for 2 <= n <= N; returns (passed, first failing n)."""
    n = np.arange(2, N + 1)
    bad = np.nonzero(np.abs(s.coeffs[2 : N + 1]) > n + tol)[0]
    return (bad.size == 0, int(n[bad[0]]) if bad.size else None)


def theta_search_report(f: HarmonicMap, theta_count: int = 360, N: int = 40, r_max: float = 0.98, M: int = 4000,
                        tol: Tolerances = DEFAULT_TOL, jobs: int = 1) -> Report:
    if theta_count < 16:
        raise VerifyError("theta search needs at least 16 cells")
    if f.order < N:
        raise OrderTooLow(f"map has order {f.order}, need at least {N}")
    thetas = 2 * np.pi * np.arange(theta_count) / theta_count

    def one(theta):
        lam = complex(math.cos(theta), math.sin(theta))
        ok, first_bad = de_branges_filter(slice(f, lam), N, tol.coeff)
        rec = {"theta": float(theta), "coefficient_filter": ok, "first_bad_n": first_bad}
        if ok:
            rep = univalence_sample_check(slice_map(f, lam), r_max, M, tol.collision_delta)
            rec["sample_check"] = rep.passed
            rec["survives"] = rep.passed
        else:
            rec["survives"] = False
        return rec

    items = _map_jobs(one, thetas, jobs)
    survivors = [d["theta"] for d in items if d["survives"]]
    return Report("theta_search", bool(survivors), float(len(survivors)), {"survivors": survivors},
                  {"cell_width": 2 * np.pi / theta_count, "survivors": survivors, "items": items})


def theta_search(f: HarmonicMap, theta_count: int = 360, N: int = 40, **kw) -> list[float]:
    """Grid angles ``theta`` whose slice ``h + exp(i theta) g`` survives the univalence filters."""
    return theta_search_report(f, theta_count, N, **kw).details["survivors"]


def convex_direction_check(phi, theta: float, r: float, samples: int = 1024) -> bool:
    """Whether ``t -> Im(exp(-i theta) phi(r e^{it}))`` has exactly one max and one min."""
    if samples < 256:
        raise VerifyError("convex_direction_check needs at least 256 samples")
    if not 0 < r < 1:
        raise VerifyError(f"radius must lie in (0, 1), got {r}")
    t = 2 * np.pi * np.arange(samples) / samples
    y = np.imag(np.exp(-1j * theta) * np.asarray(phi(r * np.exp(1j * t))))
    scale = max(1.0, float(np.max(np.abs(y))))
    keep = np.abs(y - np.roll(y, 1)) > 1e-13 * scale
    if not np.any(keep):
        return False
    y = y[keep]
    prev, nxt = np.roll(y, 1), np.roll(y, -1)
    maxima = int(np.sum((y > prev) & (y > nxt)))
    minima = int(np.sum((y < prev) & (y < nxt)))
    return maxima == 1 and minima == 1


# -- constants ---------------------------------------------------------------

def specialized_constants(c: FamilyConstants = SHS_CONSTANTS) -> dict:
    """Exponents and coefficients obtained by instantiating the general bounds."""
    return {
        "growth_exponent": c.growth_exponent,
        "covering_radius": c.covering_radius,
        "growth_denominator": 2 * c.alpha,
        "jacobian_exponents": c.jacobian_exponents,
        "derivative_exponents": c.derivative_exponents,
        "curvature_exponent": c.curvature_exponent,
        "curvature_coefficient": c.curvature_coefficient,
        "rho": c.rho,
    }
