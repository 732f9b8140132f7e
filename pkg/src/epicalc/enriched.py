"""Hypothesis graphs enriched in a calculus, and change of enrichment."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .core import Calculus, Tolerance, equal, fuse_all, is_bottom, leq, tensor
from .errors import InvalidPath, InvalidValue, InvariantBreach, MismatchedCalculi, NotConservative, UnknownObject
from .instances import get_calculus
from .maps import BALANCED, CONSERVATIVE, CalculusMap, classify

log = logging.getLogger(__name__)

MODES = ("lax", "strict")
MAX_OBJECTS = 256


@dataclass(frozen=True, eq=False)
class HypothesisGraph:
    """Finite object set with a calculus value for every ordered pair."""

    calculus: Calculus
    objects: tuple
    homs: Mapping
    mode: str

    def __post_init__(self):
        objs = tuple(self.objects)
        object.__setattr__(self, "objects", objs)
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if len(set(objs)) != len(objs):
            raise ValueError("duplicate object ids")
        if not objs:
            raise ValueError("a hypothesis graph needs at least one object")
        if len(objs) > MAX_OBJECTS:
            raise ValueError(f"at most {MAX_OBJECTS} objects are supported")
        homs = dict(self.homs)
        known = set(objs)
        for a, b in homs:
            if a not in known or b not in known:
                raise UnknownObject(f"hom ({a!r}, {b!r}) refers to an unknown object")
        missing = [(a, b) for a in objs for b in objs if (a, b) not in homs]
        if missing:
            raise ValueError(f"hom table is not total; missing {missing[:5]}")
        for (a, b), v in homs.items():
            try:
                _check_value(self.calculus, v)
            except InvalidValue as e:
                raise InvalidValue(f"hom ({a}, {b}): {e}") from None
        object.__setattr__(self, "homs", homs)

    def hom(self, a, b):
        try:
            return self.homs[a, b]
        except KeyError:
            raise UnknownObject(f"unknown object in ({a!r}, {b!r})") from None

    def index(self, h) -> int:
        try:
            return self.objects.index(h)
        except ValueError:
            raise UnknownObject(f"unknown object {h!r}") from None

    def with_homs(self, homs, calculus: Optional[Calculus] = None) -> "HypothesisGraph":
        return HypothesisGraph(calculus or self.calculus, self.objects, homs, self.mode)


def _check_value(c, v):
    if is_bottom(v):
        if not c.adjoined_bottom:
            raise InvalidValue(f"{c.id} has no bottom element")
        return
    c.check(v)


def from_priors(priors: Mapping, mode: str = "strict") -> HypothesisGraph:
    """LR graph with ``hom(H, H') = p(H') / p(H)``."""
    objs = tuple(priors)
    homs = {(a, b): priors[b] / priors[a] for a in objs for b in objs}
    return HypothesisGraph(get_calculus("LR"), objs, homs, mode)


@dataclass
class EnrichmentReport:
    valid: bool
    mode: str
    identity_violations: list = field(default_factory=list)
    composition_violations: list = field(default_factory=list)


def validate_enrichment(g: HypothesisGraph, eps: float = 1e-9) -> EnrichmentReport:
    """Exhaustive check of the identity and composition laws.

    Composition is ``hom(B, C) (x) hom(A, B) <= hom(A, C)`` in lax mode and
    equality within eps in strict mode.  Violations are listed in
    lexicographic object-index order as ``(A, B, C, fused, direct)``.
    """
    c, objs = g.calculus, g.objects
    strict = g.mode == "strict"
    ident, comp = [], []
    for a in objs:
        v = g.homs[a, a]
        ok = equal(c, v, c.unit, eps) if strict else leq(c, c.unit, v, eps, check=False)
        if not ok:
            ident.append((a, v))
    for a in objs:
        for b in objs:
            ab = g.homs[a, b]
            for d in objs:
                fused = tensor(c, g.homs[b, d], ab, eps, check=False)
                direct = g.homs[a, d]
                ok = equal(c, fused, direct, eps) if strict else leq(c, fused, direct, eps, check=False)
                if not ok:
                    comp.append((a, b, d, fused, direct))
    return EnrichmentReport(not ident and not comp, g.mode, ident, comp)


def transport(
    g: HypothesisGraph,
    F: CalculusMap,
    tolerance: Tolerance = Tolerance(),
    override_liberal: bool = False,
) -> HypothesisGraph:
    """Push every hom of ``g`` through ``F``.

    Only conservative (or balanced) maps are guaranteed to preserve the
    enrichment laws; anything else needs ``override_liberal``.  The output
    is revalidated either way.
    """
    if F.source.id != g.calculus.id:
        raise MismatchedCalculi(f"map {F.name} starts at {F.source.id}, graph is over {g.calculus.id}")
    summary = classify(F, tolerance).summary
    conservative = summary in (CONSERVATIVE, BALANCED)
    if not conservative and not override_liberal:
        raise NotConservative(f"map {F.name} classifies as {summary}; pass override_liberal to transport anyway")
    out = g.with_homs({k: F.apply(v) for k, v in g.homs.items()}, F.target)
    after = validate_enrichment(out, tolerance.eps)
    if after.valid:
        return out
    if conservative and g.mode == "lax" and validate_enrichment(g, tolerance.eps).valid:
        raise InvariantBreach(f"conservative map {F.name} broke a lax-valid graph: {after.composition_violations[:3]}")
    log.warning("transport along %s (%s) produced an invalid enrichment", F.name, summary)
    return out


def fuse_evidence_path(g: HypothesisGraph, path: Sequence):
    """Fuse the hom values along consecutive edges of ``path``."""
    path = list(path)
    if len(path) < 2:
        raise InvalidPath("a path needs at least two objects")
    for h in path:
        g.index(h)
    for a, b in zip(path, path[1:]):
        if a == b:
            raise InvalidPath(f"consecutive objects must differ; got {a!r} twice")
    edges = [g.homs[a, b] for a, b in zip(path, path[1:])]
    return fuse_all(g.calculus, edges)
