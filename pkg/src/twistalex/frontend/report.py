"""JSON reports: construction, schema validation and atomic writes."""

from __future__ import annotations

import json
import os
import tempfile
from typing import Iterable, Sequence

import jsonschema

from .. import __version__
from ..fibercheck.criteria import STATUSES, CriterionResult, ManifoldInput, norm_estimate
from ..fibercheck.search import BudgetExceeded, ConsistentUpTo, ObstructionFound
from ..laurent.poly import LaurentPoly
from ..twisted.delta import CONVENTION

DIV_CONVENTION = "gcd of phi over Schreier generators of ker(alpha)"

_POLY = {"type": ["object", "null"], "patternProperties": {"^-?[0-9]+$": {"type": "integer"}},
         "additionalProperties": False}
_COUNTS = {"type": "object", "required": ["groups", "epimorphisms", "per_group"],
           "properties": {"groups": {"type": "integer"}, "epimorphisms": {"type": "integer"},
                          "per_group": {"type": "object", "additionalProperties": {"type": "integer"}}}}
_RESULT = {
    "type": "object",
    "required": ["entry", "group", "group_order", "images", "delta0", "delta1", "delta1_content",
                 "wada", "ranks", "div_phi_G", "expected_degree", "actual_degree", "monic",
                 "monic_with_content", "status", "notes"],
    "additionalProperties": False,
    "properties": {
        "entry": {"type": "string"},
        "group": {"type": "string"},
        "group_order": {"type": "integer", "minimum": 1},
        "images": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "delta0": _POLY, "delta1": _POLY,
        "delta1_content": {"type": ["integer", "null"]},
        "wada": {"type": "object", "required": ["column", "numerator", "denominator", "consistent"],
                 "properties": {"column": {"type": ["integer", "null"]}, "numerator": _POLY,
                                "denominator": _POLY, "consistent": {"type": ["boolean", "null"]}}},
        "ranks": {"type": "object", "required": ["d1", "d2", "kernel"]},
        "div_phi_G": {"type": "integer", "minimum": 0},
        "expected_degree": {"type": ["integer", "null"]},
        "actual_degree": {"type": ["integer", "null"]},
        "monic": {"type": ["boolean", "null"]},
        "monic_with_content": {"type": ["boolean", "null"]},
        "status": {"enum": list(STATUSES)},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}
_VERDICT_ONE = {
    "type": "object",
    "required": ["kind", "max_order", "counts"],
    "properties": {
        "kind": {"enum": ["ObstructionFound", "ConsistentUpTo", "BudgetExceeded"]},
        "max_order": {"type": "integer"},
        "counts": _COUNTS,
        "witness": {"type": "integer"},
        "failures": {"type": "array", "items": {"type": "integer"}},
        "reason": {"type": "string"},
        "norm_estimate": {"type": ["string", "null"]},
    },
}
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "twistalex report",
    "type": "object",
    "required": ["version", "input", "results", "verdict", "timing"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "input": {"type": "object"},
        "results": {"type": "array", "items": _RESULT},
        "verdict": {
            "oneOf": [
                _VERDICT_ONE,
                {"type": "object", "required": ["kind", "entries"],
                 "properties": {"kind": {"const": "CorpusRun"},
                                "entries": {"type": "object", "additionalProperties": _VERDICT_ONE}}},
            ]
        },
        "timing": {"type": "object"},
    },
}


def poly_map(p: LaurentPoly | None) -> dict | None:
    if p is None:
        return None
    return {str(e): c for e, c in sorted(p.coeffs.items())}


def result_record(r: CriterionResult, entry: str) -> dict:
    b = r.bundle
    return {
        "entry": entry,
        "group": r.alpha.target.name,
        "group_order": r.alpha.target.order,
        "images": r.alpha.describe(),
        "delta0": poly_map(b.delta0),
        "delta1": poly_map(b.delta1),
        "delta1_content": b.delta1_content,
        "wada": {"column": b.column_used, "numerator": poly_map(b.wada_num),
                 "denominator": poly_map(b.wada_den), "consistent": b.wada_consistent},
        "ranks": {"d1": b.rank_d1, "d2": b.rank_d2, "kernel": b.kernel_rank},
        "div_phi_G": r.div_phi_G,
        "expected_degree": r.expected_degree,
        "actual_degree": r.actual_degree,
        "monic": r.monic,
        "monic_with_content": r.monic_with_content,
        "status": r.status,
        "notes": list(r.notes),
    }


def input_record(inp: ManifoldInput, **flags) -> dict:
    p = inp.presentation
    rec = {
        "label": inp.label,
        "generators": list(p.generators),
        "relators": p.format_relators(),
        "phi": list(inp.phi.exponents),
        "thurston_norm": inp.thurston_norm,
        "norm_source": inp.norm_source,
        "closed": inp.closed,
        "convention": CONVENTION,
        "div_convention": DIV_CONVENTION,
    }
    rec.update(flags)
    return rec


def _estimate(results: Sequence[CriterionResult]) -> str | None:
    try:
        return str(norm_estimate(results))
    except ValueError:
        return None


def verdict_record(v, results: Sequence[CriterionResult], offset: int = 0) -> dict:
    """Verdict block; witness and failures are indices into the results list."""
    index = {id(r): offset + i for i, r in enumerate(results)}
    if isinstance(v, ObstructionFound):
        return {"kind": v.kind, "max_order": v.max_order, "counts": v.counts,
                "witness": index[id(v.witness)], "failures": [index[id(f)] for f in v.failures],
                "norm_estimate": _estimate(results)}
    if isinstance(v, ConsistentUpTo):
        return {"kind": v.kind, "max_order": v.max_order, "counts": v.counts,
                "norm_estimate": _estimate(results)}
    if isinstance(v, BudgetExceeded):
        return {"kind": "BudgetExceeded", "max_order": v.max_order, "counts": v.counts,
                "reason": v.reason, "norm_estimate": _estimate(results)}
    raise TypeError(f"not a verdict: {v!r}")


def build_report(input_rec: dict, results: Iterable[dict], verdict: dict, seconds: float) -> dict:
    doc = {"version": __version__, "input": input_rec, "results": list(results),
           "verdict": verdict, "timing": {"seconds": round(seconds, 3)}}
    validate_report(doc)
    return doc


def validate_report(doc: dict) -> None:
    jsonschema.validate(doc, REPORT_SCHEMA)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def write_json_atomic(path, doc: dict) -> None:
    """Write to a temporary file in the target directory, then rename over the target."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(dumps(doc))
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def strip_timing(doc: dict) -> dict:
    out = dict(doc)
    out.pop("timing", None)
    return out
