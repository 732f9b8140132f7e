"""Command-line front end.

Exit codes: 0 success, 2 input or parse error, 3 unmet precondition,
4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import axioms as ax
from . import serialize as ser
from .core import Tolerance, fuse_all
from .enriched import transport, validate_enrichment
from .errors import (
    BoundaryValue,
    EmptyInput,
    HomUnavailable,
    InvalidPath,
    InvalidValue,
    InvariantBreach,
    MismatchedCalculi,
    NonPositiveInput,
    NotClosed,
    NotComplete,
    NotConservative,
    PreconditionUnmet,
    UnknownCalculus,
    UnknownMap,
    UnknownObject,
)
from .instances import INSTANCE_IDS, get_calculus
from .maps import MAP_NAMES, classify, get_map
from .updating import v_update

log = logging.getLogger("epicalc")

INPUT_ERRORS = (
    InvalidValue,
    EmptyInput,
    UnknownCalculus,
    UnknownMap,
    UnknownObject,
    InvalidPath,
    BoundaryValue,
    NonPositiveInput,
    OSError,
    ValueError,
)
PRECONDITION_ERRORS = (
    NotClosed,
    NotConservative,
    NotComplete,
    PreconditionUnmet,
    HomUnavailable,
    MismatchedCalculi,
)

REPORT_MAPS = ("ptb_to_ip", "ip_to_ptb", "pt_to_cf", "ptb_to_cf", "pt_to_cf_shift")


def _tolerance(args) -> Tolerance:
    return Tolerance(eps=args.eps, grid_resolution=args.grid, sample_count=args.samples, seed=args.seed)


def _read(path: str) -> str:
    return Path(path).read_text()


def _graph_input(args):
    text = _read(args.graph)
    return ser.load_graph(text), {"graph": ser.digest(text)}


def _args_digest(*parts) -> str:
    return ser.digest(json.dumps(parts))


# text renderers ----------------------------------------------------------

_MARK = {ax.Status.HOLDS_SAMPLED: "+", ax.Status.HOLDS_STRUCTURAL: "+", ax.Status.FAILS: ".", ax.Status.NOT_APPLICABLE: "n/a"}


def _text_table(table: ax.AxiomTable) -> str:
    cols = list(next(iter(table.rows.values())))
    lines = ["calc   " + " ".join(f"{a:>4}" for a in cols)]
    for cid, row in table.rows.items():
        lines.append(f"{cid:<6} " + " ".join(f"{_MARK[row[a].status]:>4}" for a in cols))
    lines.append("(+ holds, . fails)")
    for cid, notes in table.caveats.items():
        for n in notes:
            lines.append(f"note [{cid}]: {n}")
    return "\n".join(lines) + "\n"


def _text_graph(gd: dict) -> str:
    lines = [f"{gd['calculus']} graph ({gd['mode']})"]
    for h in gd["homs"]:
        lines.append(f"  {h['from']} -> {h['to']}: {json.dumps(h['value'])}")
    return "\n".join(lines) + "\n"


def _text_validation(v: dict) -> str:
    if v["valid"]:
        return f"valid ({v['mode']})\n"
    lines = [f"INVALID ({v['mode']})"]
    for i in v["identity_violations"]:
        lines.append(f"  identity {i['object']}: {json.dumps(i['value'])}")
    for c in v["composition_violations"]:
        lines.append(f"  triple ({', '.join(c['triple'])}): fused {json.dumps(c['fused'])} vs direct {json.dumps(c['direct'])}")
    return "\n".join(lines) + "\n"


# commands ----------------------------------------------------------------


def cmd_axioms(args):
    t = _tolerance(args)
    cs = [get_calculus(c) for c in args.calculi]
    table = ax.axiom_table(cs, t, region=args.region)
    doc = ser.envelope(
        "axioms", t, {"calculi": _args_digest(*[c.id for c in cs])}, ser.table_to_dict(table), region=args.region or "default"
    )
    return doc, _text_table(table)


def cmd_fuse(args):
    c = get_calculus(args.calculus)
    vals = []
    for i, text in enumerate(args.values, 1):
        try:
            vals.append(ser.parse_value_text(c, text))
        except InvalidValue as e:
            raise InvalidValue(f"value #{i} ({text!r}): {e}") from None
    t = _tolerance(args)
    out = ser.value_to_json(fuse_all(c, vals, t.eps))
    doc = ser.envelope(
        "fuse", t, {"values": _args_digest(c.id, *args.values)}, {"calculus": c.id, "values": [ser.value_to_json(v) for v in vals], "fused": out}
    )
    return doc, json.dumps(out) + "\n"


def cmd_classify(args):
    t = _tolerance(args)
    k = classify(get_map(args.map), t)
    d = ser.classification_to_dict(k)
    lines = [f"{k.name}: {k.summary}"]
    for name, v in k.verdicts().items():
        cex = "" if v.counterexample is None else f"  counterexample {json.dumps(ser._values(v.counterexample))}"
        lines.append(f"  {name:<10} {v.status.value}{cex}")
    return ser.envelope("classify", t, {"map": _args_digest(args.map)}, d), "\n".join(lines) + "\n"


def cmd_transport(args):
    t = _tolerance(args)
    g, inputs = _graph_input(args)
    F = get_map(args.map)
    out = transport(g, F, t, override_liberal=args.override_liberal_transport)
    report = ser.enrichment_to_dict(validate_enrichment(out, t.eps))
    result = {
        "map": F.name,
        "classification": classify(F, t).summary,
        "graph": ser.graph_to_dict(out),
        "validation": report,
    }
    inputs["map"] = _args_digest(args.map)
    return ser.envelope("transport", t, inputs, result), _text_graph(result["graph"]) + _text_validation(report)


def cmd_update(args):
    t = _tolerance(args)
    g, inputs = _graph_input(args)
    r = v_update(g, args.evidence, t.eps)
    inputs["evidence"] = _args_digest(args.evidence)
    d = ser.update_to_dict(r)
    return ser.envelope("update", t, inputs, d), _text_graph(d["graph"]) + _text_validation(d["validation"])


def cmd_validate(args):
    t = _tolerance(args)
    g, inputs = _graph_input(args)
    d = ser.enrichment_to_dict(validate_enrichment(g, t.eps))
    return ser.envelope("validate", t, inputs, d), _text_validation(d)


def cmd_report(args):
    """Axiom table, theorem checks and map classifications in one document."""
    t = _tolerance(args)
    ids = args.calculi or list(INSTANCE_IDS)
    cs = [get_calculus(c) for c in ids]
    table = ax.axiom_table(cs, t)
    no_go, idem = {}, {}
    for c in cs:
        if "complete" in c.flags:
            no_go[c.id] = ser.no_go_to_dict(ax.check_no_go(c, t, table.rows[c.id]))
        try:
            idem[c.id] = ser.idempotent_to_dict(ax.check_idempotent_min(c, t))
        except PreconditionUnmet as e:
            idem[c.id] = {"calculus": c.id, "precondition_unmet": e.hypotheses}
    maps = {n: ser.classification_to_dict(classify(get_map(n), t)) for n in REPORT_MAPS}
    result = {"axioms": ser.table_to_dict(table), "no_go": no_go, "idempotent_min": idem, "maps": maps}
    lines = [_text_table(table)]
    for cid, r in no_go.items():
        lines.append(f"no-go {cid}: {'consistent' if r['consistent'] else 'VIOLATED: ' + '; '.join(r['violations'])}")
    for cid, r in idem.items():
        state = "holds" if r.get("holds") else ("unmet: " + "; ".join(r["precondition_unmet"]) if "precondition_unmet" in r else "FAILS")
        lines.append(f"idempotent=>min {cid}: {state}")
    for n, m in maps.items():
        lines.append(f"map {n}: {m['summary']}")
    return ser.envelope("report", t, {"calculi": _args_digest(*ids)}, result), "\n".join(lines) + "\n"


# parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=1e-9)
    common.add_argument("--samples", type=int, default=10_000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--grid", type=int, default=1024)
    common.add_argument("--out", help="write the JSON document here instead of stdout")
    common.add_argument("--format", choices=("json", "table-text"), default="json")

    p = argparse.ArgumentParser(prog="epicalc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("axioms", parents=[common], help="axiom table for bundled calculi")
    s.add_argument("calculi", nargs="+", metavar="CALC", help="|".join(INSTANCE_IDS))
    s.add_argument("--region", choices=("interior", "full"), default=None)
    s.set_defaults(func=cmd_axioms)

    s = sub.add_parser("fuse", parents=[common], help="fuse a list of values")
    s.add_argument("calculus", metavar="CALC")
    s.add_argument("values", nargs="+", metavar="VALUE")
    s.set_defaults(func=cmd_fuse)

    s = sub.add_parser("classify", parents=[common], help="classify a change of calculi")
    s.add_argument("map", metavar="MAP", help="|".join(MAP_NAMES))
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("transport", parents=[common], help="transport a graph along a map")
    s.add_argument("graph")
    s.add_argument("map", metavar="MAP")
    s.add_argument("--override-liberal-transport", action="store_true")
    s.set_defaults(func=cmd_transport)

    s = sub.add_parser("update", parents=[common], help="update a graph on evidence")
    s.add_argument("graph")
    s.add_argument("--evidence", required=True)
    s.set_defaults(func=cmd_update)

    s = sub.add_parser("validate", parents=[common], help="check the enrichment laws of a graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("report", parents=[common], help="full axiom/theorem/map report")
    s.add_argument("calculi", nargs="*", metavar="CALC")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        doc, text = args.func(args)
    except PRECONDITION_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InvariantBreach as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return 4
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    payload = ser.dumps(doc)
    if args.out:
        Path(args.out).write_text(payload)
    if args.format == "table-text":
        sys.stdout.write(text)
    elif not args.out:
        sys.stdout.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
