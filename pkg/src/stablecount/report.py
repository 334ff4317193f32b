"""JSON and TSV serialization of results.

Integers beyond 2**53 are written as decimal strings so that JSON readers
using doubles never round them; fractions become ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction

import numpy as np

from .extremal import VerificationReport
from .graph import Graph
from .polytope import Facet, Polytope2, polytope_dict

SCHEMA = "stablecount/1"
TOOL_VERSION = "0.1.0"
SAFE_INT = 2**53


def jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        obj = int(obj)
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else jsonable(obj.numerator)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, VerificationReport):
        return jsonable(obj.to_dict())
    if isinstance(obj, Polytope2):
        return jsonable(polytope_dict(obj))
    if isinstance(obj, Facet):
        return {"a": jsonable(obj.a), "b": jsonable(obj.b), "c": jsonable(obj.c)}
    if isinstance(obj, Graph):
        return obj.to_graph6()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def json_report(command: list[str], inputs, results, timing_ms: int) -> dict:
    return {
        "schema": SCHEMA,
        "tool_version": TOOL_VERSION,
        "command": list(command),
        "inputs": inputs,
        "results": results,
        "timing_ms": int(timing_ms),
    }


def _tsv_cell(v) -> str:
    v = jsonable(v)
    return v if isinstance(v, str) else json.dumps(v)


def emit_report(obj, fmt: str = "json") -> str:
    """Serialize deterministically; TSV accepts row lists, reports and polytopes."""
    if fmt == "json":
        return json.dumps(jsonable(obj), indent=2, ensure_ascii=False) + "\n"
    if fmt != "tsv":
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, VerificationReport):
        rows = [("alpha", "F", "graph6")] + sorted(obj.extremal_witnesses)
    elif isinstance(obj, Polytope2):
        rows = [("alpha", "F")] + list(obj.vertices)
    else:
        rows = list(obj)
    return "".join("\t".join(_tsv_cell(c) for c in row) + "\n" for row in rows)
