"""JSON/CSV rendering.

Integers are always written as decimal strings so that big values survive
64-bit JSON readers; rationals become ``{"num", "den", "decimal"}``.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from .perm import Permutation

DEFAULT_DIGITS = 12


def to_decimal(x: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    """``x`` to ``digits`` significant digits, round-half-even."""
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    return str(ctx.divide(Decimal(x.numerator), Decimal(x.denominator)))


def rational(x, digits: int = DEFAULT_DIGITS) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator), "decimal": to_decimal(x, digits)}


def jsonable(obj):
    """Recursively convert payloads: ints to strings, rationals to dicts,
    permutations to their canonical space-separated form."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Permutation):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(command: str, parameters: dict, results, version: str) -> dict:
    return {
        "command": command,
        "parameters": jsonable(parameters),
        "results": jsonable(results),
        "tool_version": version,
    }


def dumps(env: dict) -> str:
    return json.dumps(env, sort_keys=True, indent=2) + "\n"


def csv_text(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _cell(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(v)
