"""Parser for the textual function specs accepted on the command line.

Two forms are understood::

    harmonic_koebe
    f_a_lambda(a=1+sqrt(2), lambda=i)
    shear phi=[0,1]/[1,-2,1] omega=[0,1] theta=pi
    harmonic h=[0,1,1] g=[0,0,1]

Coefficient lists are ascending powers of ``z``.  Numeric fields accept
arithmetic with ``pi``, ``e``, ``i``/``j``, ``sqrt``, ``exp``, ``cos``,
``sin`` and Python complex literals.
"""

from __future__ import annotations

import ast
import cmath
import math
import operator
import re
from dataclasses import dataclass

from .analytic import Rational
from .analytic import PointFn
from .mapcore import HarmonicMap
from .powerseries import DEFAULT_ORDER
from .shearing import KOEBE, CatalogId, ShearSpec, catalog, shear


class FunctionSpecError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position}\n  {text}\n  {' ' * position}^")


_NAMES = {"pi": math.pi, "e": math.e, "i": 1j, "j": 1j, "I": 1j}
_FUNCS = {"sqrt": cmath.sqrt, "exp": cmath.exp, "cos": cmath.cos, "sin": cmath.sin, "log": cmath.log}
_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv,
           ast.Pow: operator.pow}
_UNOPS = {ast.UAdd: operator.pos, ast.USub: operator.neg}


def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        return node.value
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_node(node.left), _eval_node(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
        return _UNOPS[type(node.op)](_eval_node(node.operand))
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS and len(node.args) == 1:
        return _FUNCS[node.func.id](_eval_node(node.args[0]))
    raise ValueError(f"unsupported expression element {ast.dump(node)[:40]}")


def eval_number(expr: str, text: str = "", offset: int = 0) -> complex:
    """Evaluate a restricted numeric expression; real results come back as float."""
    try:
        src = re.sub(r"(\d|\.)i\b", r"\1j", expr.strip())  # 0.5i -> 0.5j
        val = _eval_node(ast.parse(src, mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError, TypeError) as exc:
        raise FunctionSpecError(text or expr, offset, f"bad number {expr!r}: {exc}") from None
    val = complex(val)
    return val.real if val.imag == 0 else val


def _split_top(s: str, sep: str, base: int):
    """Split on ``sep`` outside brackets; yields (piece, absolute offset)."""
    depth, start = 0, 0
    for k, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and (ch == sep or (sep == " " and ch.isspace())):
            if k > start:
                yield s[start:k], base + start
            start = k + 1
    if len(s) > start:
        yield s[start:], base + start


def _coeff_list(s: str, text: str, offset: int):
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise FunctionSpecError(text, offset, f"expected a coefficient list like [0,1], got {s!r}")
    body = s[1:-1]
    if not body.strip():
        raise FunctionSpecError(text, offset, "empty coefficient list")
    return [eval_number(p, text, off) for p, off in _split_top(body, ",", offset + 1)]


def parse_rational(s: str, text: str = "", offset: int = 0) -> Rational:
    text = text or s
    if s.strip().lower() == "koebe":
        return KOEBE
    parts = list(_split_top(s, "/", offset))
    if len(parts) > 2:
        raise FunctionSpecError(text, parts[2][1], "a rational function has at most one '/'")
    num = _coeff_list(parts[0][0], text, parts[0][1])
    den = _coeff_list(parts[1][0], text, parts[1][1]) if len(parts) == 2 else [1.0]
    try:
        return Rational(num, den)
    except ZeroDivisionError:
        raise FunctionSpecError(text, parts[-1][1], "denominator is identically zero") from None


@dataclass(frozen=True)
class ShearText:
    phi: Rational
    omega: Rational
    theta: float


@dataclass(frozen=True)
class HarmonicText:
    """A map given directly by its rational parts ``h`` and ``g``."""

    h: Rational
    g: Rational


_NAME_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*")


def parse_function(text: str):
    """Parse to a :class:`CatalogId`, :class:`ShearText` or :class:`HarmonicText`."""
    m = _NAME_RE.match(text)
    if not m:
        raise FunctionSpecError(text, 0, "expected a function name")
    name, pos = m.group(1), m.end()
    if name == "shear":
        return _parse_shear(text, pos)
    if name == "harmonic":
        f = _parse_fields(text, pos, ("h", "g"), ("h", "g"))
        return HarmonicText(*(parse_rational(f[k][0], text, f[k][1]) for k in ("h", "g")))
    rest = text[pos:]
    if not rest.strip():
        return CatalogId(name, {})
    if not rest.startswith("(") or not rest.rstrip().endswith(")"):
        raise FunctionSpecError(text, pos, "expected '(param=value, ...)' after the name")
    inner = rest.rstrip()[1:-1]
    params = {}
    for piece, off in _split_top(inner, ",", pos + 1):
        if "=" not in piece:
            raise FunctionSpecError(text, off, f"expected key=value, got {piece.strip()!r}")
        key, val = piece.split("=", 1)
        key = key.strip()
        if key in params:
            raise FunctionSpecError(text, off, f"parameter {key!r} given twice")
        params[key] = eval_number(val, text, off + len(key) + 1)
    for key in ("n",):
        if key in params:
            v = params[key]
            if isinstance(v, complex) or v != int(v):
                raise FunctionSpecError(text, pos, f"{key} must be an integer")
            params[key] = int(v)
    return CatalogId(name, params)


def _parse_fields(text: str, pos: int, allowed, required) -> dict:
    fields = {}
    for piece, off in _split_top(text[pos:], " ", pos):
        if "=" not in piece:
            raise FunctionSpecError(text, off, f"expected key=value, got {piece!r}")
        key, val = piece.split("=", 1)
        if key not in allowed:
            raise FunctionSpecError(text, off, f"unknown field {key!r} ({', '.join(allowed)})")
        if key in fields:
            raise FunctionSpecError(text, off, f"field {key!r} given twice")
        fields[key] = (val, off + len(key) + 1)
    for key in required:
        if key not in fields:
            raise FunctionSpecError(text, len(text), f"spec is missing {key}=")
    return fields


def _parse_shear(text: str, pos: int) -> ShearText:
    fields = _parse_fields(text, pos, ("phi", "omega", "theta"), ("phi", "omega"))
    theta = math.pi
    if "theta" in fields:
        theta = eval_number(fields["theta"][0], text, fields["theta"][1])
        if isinstance(theta, complex):
            raise FunctionSpecError(text, fields["theta"][1], "theta must be real")
    return ShearText(parse_rational(fields["phi"][0], text, fields["phi"][1]),
                     parse_rational(fields["omega"][0], text, fields["omega"][1]), float(theta))


def build_map(text: str, order: int = DEFAULT_ORDER) -> HarmonicMap:
    parsed = parse_function(text)
    if isinstance(parsed, ShearText):
        spec = ShearSpec.from_rational(parsed.phi, parsed.omega, parsed.theta, order)
        f = shear(spec, order)
        return HarmonicMap(f.h, f.g, f.h_fn, f.g_fn, label=text.strip())
    if isinstance(parsed, HarmonicText):
        for part, name in ((parsed.h, "h"), (parsed.g, "g")):
            if abs(part(0.0)) > 1e-12:
                raise FunctionSpecError(text, 0, f"{name}(0) must vanish")
        return HarmonicMap(parsed.h.to_series(order), parsed.g.to_series(order), PointFn.rational(parsed.h, "h"),
                           PointFn.rational(parsed.g, "g"), label=text.strip())
    return catalog(parsed, order)
