"""Updating an enriched hypothesis graph on a piece of evidence.

The update of ``hom(H, H')`` on evidence ``E`` is the internal hom

    [hom(H, H') (x) hom(H', E),  hom(H, E)]

Three oracles cross-check it without touching calculus operations: Bayes'
rule in odds form (LR), two-branch possibilistic conditioning (PT), and
additive evidence coordinates via artanh (CF).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .core import tensor
from .enriched import EnrichmentReport, HypothesisGraph, validate_enrichment
from .errors import BoundaryValue, CalculusMismatch, NonPositiveInput, NotClosed, UnknownObject
from .instances import get_calculus


class Provenance(NamedTuple):
    prior: object  # hom(H, H')
    explained: object  # hom(H', E)
    evidence: object  # hom(H, E)


@dataclass(frozen=True, eq=False)
class UpdateResult:
    graph: HypothesisGraph
    evidence: str
    provenance: dict
    report: EnrichmentReport


def _require_object(g, h):
    if h not in g.objects:
        raise UnknownObject(f"unknown object {h!r}")


def update_value(c, prov: Provenance):
    return c.hom_fn(tensor(c, prov.prior, prov.explained, check=False), prov.evidence)


def v_update(g: HypothesisGraph, evidence, eps: float = 1e-9) -> UpdateResult:
    """Update every hom of ``g`` (pairs involving ``evidence`` included)."""
    c = g.calculus
    if c.hom_fn is None:
        raise NotClosed(f"{c.id} declares no internal hom; updating needs a closed calculus")
    _require_object(g, evidence)
    prov, homs = {}, {}
    for a in g.objects:
        for b in g.objects:
            p = Provenance(g.homs[a, b], g.homs[b, evidence], g.homs[a, evidence])
            prov[a, b] = p
            homs[a, b] = update_value(c, p)
    out = g.with_homs(homs)
    return UpdateResult(out, evidence, prov, validate_enrichment(out, eps))


def replay(result: UpdateResult) -> dict:
    """Recompute each updated hom from its provenance record."""
    c = result.graph.calculus
    return {k: update_value(c, p) for k, p in result.provenance.items()}


def normalize(g: HypothesisGraph, reference) -> dict:
    """Relative values ``p(H) = hom(R, H)``; ``p(R)`` is the unit on valid strict graphs."""
    _require_object(g, reference)
    return {h: g.homs[reference, h] for h in g.objects}


# oracles -----------------------------------------------------------------


def bayes_oracle(priors: Mapping, likelihoods: Mapping) -> dict:
    """Posterior odds ``p(H) p(E|H) / (p(H') p(E|H'))`` for every ordered pair."""
    for h, p in priors.items():
        if not (math.isfinite(p) and p > 0):
            raise NonPositiveInput(f"prior of {h!r} must be positive and finite, got {p!r}")
    for h in priors:
        if h not in likelihoods:
            raise NonPositiveInput(f"missing likelihood for {h!r}")
        q = likelihoods[h]
        if not (0 < q <= 1):
            raise NonPositiveInput(f"likelihood of {h!r} must lie in (0, 1], got {q!r}")
    return {(a, b): (priors[a] * likelihoods[a]) / (priors[b] * likelihoods[b]) for a in priors for b in priors}


def bayes_graph(priors: Mapping, likelihoods: Mapping, evidence: str = "E", mode: str = "lax") -> HypothesisGraph:
    """LR graph over the hypotheses plus an evidence object.

    ``hom(H, H') = p(H')/p(H)`` and ``hom(H, E) = p(E|H)``; the evidence
    row ``hom(E, H) = 1/p(E|H)`` only completes the table.
    """
    bayes_oracle(priors, likelihoods)
    if evidence in priors:
        raise ValueError(f"evidence id {evidence!r} collides with a hypothesis")
    objs = (*priors, evidence)
    homs = {(a, b): priors[b] / priors[a] for a in priors for b in priors}
    for h in priors:
        homs[h, evidence] = float(likelihoods[h])
        homs[evidence, h] = 1.0 / likelihoods[h]
    homs[evidence, evidence] = 1.0
    return HypothesisGraph(get_calculus("LR"), objs, homs, mode)


def possibilistic_oracle(g: HypothesisGraph, evidence) -> dict:
    """Two-branch conditioning: 1 if min(hom(H,H'), hom(H',E)) <= hom(H,E), else hom(H,E)."""
    if g.calculus.id != "PT":
        raise CalculusMismatch(f"possibilistic oracle needs a PT graph, got {g.calculus.id}")
    _require_object(g, evidence)
    out = {}
    for a in g.objects:
        for b in g.objects:
            e = g.homs[a, evidence]
            out[a, b] = 1.0 if min(g.homs[a, b], g.homs[b, evidence]) <= e else e
    return out


def cf_evidence_oracle(g: HypothesisGraph, evidence) -> dict:
    """CF update through additive evidence coordinates ``e = artanh(cf)``."""
    if g.calculus.id != "CF":
        raise CalculusMismatch(f"evidence-coordinate oracle needs a CF graph, got {g.calculus.id}")
    _require_object(g, evidence)
    for k, v in g.homs.items():
        if abs(v) >= 1.0:
            raise BoundaryValue(f"hom {k} = {v!r} has infinite evidence coordinate")
    e = {k: math.atanh(v) for k, v in g.homs.items()}
    return {
        (a, b): math.tanh(e[a, evidence] - (e[a, b] + e[b, evidence])) for a in g.objects for b in g.objects
    }
