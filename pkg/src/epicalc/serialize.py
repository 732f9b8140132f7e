"""JSON forms of values, graphs, verdicts and reports.

Canonical output is ``json.dumps(..., sort_keys=True, indent=2)`` with
floats written in Python's shortest round-trip form (at most 17
significant digits), so reruns are byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import math

from . import __version__
from .axioms import AxiomTable, IdempotentMinReport, NoGoReport, Verdict
from .core import INTERVAL, PAIR, SCALAR, BOTTOM, Calculus, Interval, Pair, Tolerance, is_bottom, is_scalar
from .enriched import EnrichmentReport, HypothesisGraph
from .errors import InvalidValue
from .instances import get_calculus
from .maps import MapClassification
from .updating import UpdateResult


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False, ensure_ascii=False) + "\n"


def digest(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode()
    return "sha256:" + hashlib.sha256(data).hexdigest()


# values ------------------------------------------------------------------


def value_to_json(v):
    if is_bottom(v):
        return "bottom"
    if isinstance(v, Pair):
        return [float(v.r), float(v.p)]
    if isinstance(v, Interval):
        return {"lo": float(v.lo), "hi": float(v.hi)}
    if is_scalar(v):
        return float(v)
    raise InvalidValue(f"cannot serialize {v!r}")


def _num(x, what):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InvalidValue(f"{what}: expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise InvalidValue(f"{what}: {x!r} is not finite")
    return x


def value_from_json(c: Calculus, obj):
    """Parse and validate one carrier value of ``c``."""
    if obj == "bottom":
        if not c.adjoined_bottom:
            raise InvalidValue(f"{c.id} has no bottom element")
        return BOTTOM
    if c.kind == SCALAR:
        v = _num(obj, c.id)
    elif c.kind == PAIR:
        if not (isinstance(obj, list) and len(obj) == 2):
            raise InvalidValue(f"{c.id} values are [r, p] pairs, got {obj!r}")
        v = Pair(_num(obj[0], "r"), _num(obj[1], "p"))
    elif c.kind == INTERVAL:
        if not (isinstance(obj, dict) and set(obj) == {"lo", "hi"}):
            raise InvalidValue(f"{c.id} values are {{\"lo\": .., \"hi\": ..}} objects, got {obj!r}")
        v = Interval(_num(obj["lo"], "lo"), _num(obj["hi"], "hi"))
    else:
        raise InvalidValue(f"unknown carrier kind {c.kind}")
    c.check(v)
    return v


def parse_value_text(c: Calculus, text: str):
    """Command-line value: a number, ``bottom``, ``r,p`` / ``lo,hi``, or JSON."""
    text = text.strip()
    if text.lower() == "bottom":
        return value_from_json(c, "bottom")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        parts = text.split(",")
        if len(parts) != 2:
            raise InvalidValue(f"cannot parse {text!r}") from None
        try:
            nums = [float(p) for p in parts]
        except ValueError:
            raise InvalidValue(f"cannot parse {text!r}") from None
        obj = nums if c.kind == PAIR else {"lo": nums[0], "hi": nums[1]}
    if c.kind == INTERVAL and isinstance(obj, list) and len(obj) == 2:
        obj = {"lo": obj[0], "hi": obj[1]}
    return value_from_json(c, obj)


# graphs ------------------------------------------------------------------


def graph_to_dict(g: HypothesisGraph, **extra) -> dict:
    d = {
        "calculus": g.calculus.id,
        "mode": g.mode,
        "objects": list(g.objects),
        "homs": [
            {"from": a, "to": b, "value": value_to_json(g.homs[a, b])} for a in g.objects for b in g.objects
        ],
    }
    d.update(extra)
    return d


def graph_from_dict(d: dict) -> HypothesisGraph:
    for key in ("calculus", "mode", "objects", "homs"):
        if key not in d:
            raise InvalidValue(f"graph document lacks {key!r}")
    c = get_calculus(d["calculus"])
    objs = d["objects"]
    if not isinstance(objs, list) or not all(isinstance(o, str) for o in objs):
        raise InvalidValue("objects must be a list of strings")
    homs = {}
    for i, h in enumerate(d["homs"]):
        try:
            key = (h["from"], h["to"])
            raw = h["value"]
        except (KeyError, TypeError):
            raise InvalidValue(f"homs[{i}] needs from, to and value") from None
        if key in homs:
            raise InvalidValue(f"homs[{i}] duplicates {key}")
        try:
            homs[key] = value_from_json(c, raw)
        except InvalidValue as e:
            raise InvalidValue(f"homs[{i}] ({key[0]} -> {key[1]}): {e}") from None
    return HypothesisGraph(c, tuple(objs), homs, d["mode"])


def load_graph(text: str) -> HypothesisGraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidValue(f"graph is not valid JSON: {e}") from None
    if not isinstance(d, dict):
        raise InvalidValue("graph document must be a JSON object")
    return graph_from_dict(d)


def dump_graph(g: HypothesisGraph) -> str:
    return dumps(graph_to_dict(g))


# reports -----------------------------------------------------------------


def tolerance_to_dict(t: Tolerance) -> dict:
    return {"eps": t.eps, "grid": t.grid_resolution, "samples": t.sample_count, "seed": t.seed}


def _values(vs):
    return None if vs is None else [value_to_json(v) for v in vs]


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "check": v.check,
        "status": v.status.value,
        "counterexample": _values(v.counterexample),
        "notes": v.notes,
        "region": v.region,
        "sampler": tolerance_to_dict(v.tolerance),
    }


def table_to_dict(table: AxiomTable) -> dict:
    return {
        "rows": {cid: {a: verdict_to_dict(v) for a, v in row.items()} for cid, row in table.rows.items()},
        "holds": {cid: sorted(s) for cid, s in table.pattern().items()},
        "caveats": table.caveats,
    }


def classification_to_dict(k: MapClassification) -> dict:
    return {
        "map": k.name,
        "summary": k.summary,
        "verdicts": {name: verdict_to_dict(v) for name, v in k.verdicts().items()},
    }


def _loose(x):
    if isinstance(x, (Pair, Interval)) or is_bottom(x) or is_scalar(x):
        return value_to_json(x)
    return x


def enrichment_to_dict(r: EnrichmentReport) -> dict:
    return {
        "valid": r.valid,
        "mode": r.mode,
        "identity_violations": [{"object": a, "value": _loose(v)} for a, v in r.identity_violations],
        "composition_violations": [
            {"triple": [a, b, c], "fused": _loose(f), "direct": _loose(d)}
            for a, b, c, f, d in r.composition_violations
        ],
    }


def update_to_dict(r: UpdateResult) -> dict:
    return {
        "evidence": r.evidence,
        "graph": graph_to_dict(r.graph, evidence=r.evidence),
        "provenance": [
            {
                "from": a,
                "to": b,
                "prior": _loose(p.prior),
                "explained": _loose(p.explained),
                "evidence": _loose(p.evidence),
            }
            for (a, b), p in r.provenance.items()
        ],
        "validation": enrichment_to_dict(r.report),
    }


def no_go_to_dict(r: NoGoReport) -> dict:
    return {
        "calculus": r.calculus,
        "consistent": r.consistent,
        "violations": r.violations,
        "verdicts": {a: verdict_to_dict(v) for a, v in sorted(r.verdicts.items())},
    }


def idempotent_to_dict(r: IdempotentMinReport) -> dict:
    return {
        "calculus": r.calculus,
        "holds": r.holds,
        "counterexample": _values(r.counterexample),
        "samples": r.samples,
    }


def envelope(command: str, t: Tolerance, inputs: dict, result, **config) -> dict:
    return {
        "tool": {"name": "epicalc", "version": __version__},
        "command": command,
        "config": {**tolerance_to_dict(t), **config},
        "inputs": inputs,
        "result": result,
    }
