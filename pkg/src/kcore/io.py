"""JSON formats for games, orders, atlases, vertex lists and polyhedron summaries.

Coalitions are written as comma-separated ascending player lists (``"1,3"``);
numbers as exact rational strings (``"1/10"``, ``"-2"``).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Optional

from .errors import InputError
from .orders import SubsetOrder
from .setfn import GameTable, MobiusVector, elements, inverse_mobius, subsets_up_to

_KEY = re.compile(r"^\s*(\d+\s*(,\s*\d+\s*)*)?$")


def mask_key(mask: int) -> str:
    return ",".join(map(str, elements(mask)))


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def decimal_str(x: Fraction, digits: int = 6) -> str:
    """Decimal approximation for display only; rounding is done on the exact value."""
    x = Fraction(x)
    scaled = round(x * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10 ** digits)
    text = f"{sign}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def _line_of(text: str, needle: str) -> Optional[int]:
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def _where(text: str, needle: str) -> str:
    line = _line_of(text, needle) if text else None
    return f" (line {line})" if line else ""


def _loads(text: str, source: str):
    try:
        # floats are kept as their literal text so that 0.1 stays 1/10
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_rational(value, context: str = "value") -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"{context}: expected a decimal or 'p/q' string, got {value!r}")
    try:
        return Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{context}: {value!r} is not a rational number") from None


def parse_mask(key: str, n: int, context: str = "key") -> int:
    if not isinstance(key, str) or not _KEY.match(key):
        raise InputError(f"{context}: {key!r} is not a comma-separated player list")
    items = [int(p) for p in key.split(",") if p.strip()]
    if items != sorted(set(items)):
        raise InputError(f"{context}: players in {key!r} must be strictly ascending")
    if items and (items[0] < 1 or items[-1] > n):
        raise InputError(f"{context}: {key!r} mentions a player outside 1..{n}")
    mask = 0
    for i in items:
        mask |= 1 << (i - 1)
    return mask


def _require_n(doc, source):
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= 24:
        raise InputError(f"{source}: 'n' must be an integer in [1, 24], got {n!r}")
    return n


def game_from_json(text: str, source: str = "game") -> GameTable:
    doc = _loads(text, source)
    n = _require_n(doc, source)
    form = doc.get("form", "game")
    if form not in ("game", "mobius"):
        raise InputError(f"{source}: 'form' must be 'game' or 'mobius', got {form!r}")
    entries = doc.get("entries", {})
    if not isinstance(entries, dict):
        raise InputError(f"{source}: 'entries' must be an object")
    values = {}
    for key, raw in entries.items():
        ctx = f"{source}{_where(text, json.dumps(key))}"
        mask = parse_mask(key, n, ctx)
        if mask in values:
            raise InputError(f"{ctx}: coalition {key!r} given twice")
        values[mask] = parse_rational(raw, f"{ctx}: entry {key!r}")
    if values.get(0, 0) != 0:
        raise InputError(f"{source}{_where(text, json.dumps(''))}: a game must vanish on the empty set")
    values.pop(0, None)
    if form == "mobius":
        return inverse_mobius(MobiusVector(n, values))
    return GameTable(n, values)


def game_to_json(v: GameTable, form: str = "game") -> str:
    data = v.values if form == "game" else v.mobius().coeffs
    entries = {mask_key(m): fraction_str(data[m]) for m in range(1, 1 << v.n) if data[m] != 0}
    return json.dumps({"n": v.n, "form": form, "entries": entries}, indent=2, ensure_ascii=False)


def order_from_json(text: str, source: str = "order") -> SubsetOrder:
    doc = _loads(text, source)
    n = _require_n(doc, source)
    k = doc.get("k")
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
        raise InputError(f"{source}: 'k' must be an integer in [1, n], got {k!r}")
    seq = doc.get("sequence")
    if not isinstance(seq, list):
        raise InputError(f"{source}: 'sequence' must be a list of coalitions")
    masks = tuple(parse_mask(s, n, f"{source}: sequence") for s in seq)
    try:
        return SubsetOrder(n, k, masks)
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from None


def order_to_dict(order: SubsetOrder) -> dict:
    return {"n": order.n, "k": order.k, "sequence": [mask_key(m) for m in order.sequence]}


def atlas_to_list(atlas) -> list:
    out = []
    for b in atlas.order.sequence:
        f = atlas[b]
        out.append({
            "center": mask_key(f.b),
            "members": [mask_key(m) for m in f.sorted_members()],
            "top": None if f.top is None else mask_key(f.top),
            "lattice": f.is_lattice,
            "empty": f.empty,
        })
    return out


def mobius_to_dict(m: MobiusVector, k: Optional[int] = None) -> dict:
    """All coefficients on P^k_*(N) when ``k`` is given, else the nonzero ones."""
    if k is None:
        masks = [mask for mask in range(1, 1 << m.n) if m[mask] != 0]
    else:
        masks = subsets_up_to(m.n, k)
    return {mask_key(mask): fraction_str(m[mask]) for mask in masks}


def certificate_to_dict(cert) -> dict:
    out = {
        "mobius": mobius_to_dict(cert.point, cert.k),
        "tight": list(cert.tight_labels),
        "rank": cert.rank,
        "vertex": cert.is_vertex,
    }
    if cert.source is not None:
        out["source"] = cert.source
    if cert.guaranteed is not None:
        out["guaranteed"] = cert.guaranteed
    if cert.violated_rows:
        out["violated"] = list(cert.violated_rows)
    return out


def point_to_dict(variables, x) -> dict:
    return {mask_key(m): fraction_str(c) for m, c in zip(variables, x)}


def summary_to_dict(summary, variables) -> dict:
    return {
        "feasible": summary.feasible,
        "bounded": summary.bounded,
        "vertices": [point_to_dict(variables, x) for x in summary.vertices],
        "rays": [point_to_dict(variables, d) for d in summary.rays],
        "lines": [point_to_dict(variables, d) for d in summary.lines],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False)
