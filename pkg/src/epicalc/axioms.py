"""Sampled checks of the calculus axioms E1-E8 and the monoidal laws.

A ``HOLDS_SAMPLED`` verdict means no counterexample was found at the
configured sampling effort; it is never a proof.  Every ``FAILS`` verdict
carries a counterexample that replays through :mod:`epicalc.core`.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from typing import Optional

from . import core
from .core import Calculus, Tolerance, equal, is_bottom, leq, tensor
from .errors import PreconditionUnmet
from .sampling import sample_tuples

AXIOMS = ("E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "LAWS")
TABLE_AXIOMS = AXIOMS[:8]

# z values tested against each hom_by_sup evaluation
Z_PER_HOM = 50


class Status(str, enum.Enum):
    HOLDS_SAMPLED = "HOLDS_SAMPLED"
    HOLDS_STRUCTURAL = "HOLDS_STRUCTURAL"
    FAILS = "FAILS"
    NOT_APPLICABLE = "NOT_APPLICABLE"

    @property
    def holds(self) -> bool:
        return self in (Status.HOLDS_SAMPLED, Status.HOLDS_STRUCTURAL)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one sampled check (an axiom or a map property)."""

    check: str
    status: Status
    counterexample: Optional[tuple] = None
    notes: str = ""
    tolerance: Tolerance = field(default_factory=Tolerance)
    region: str = "full"

    def __post_init__(self):
        if (self.status is Status.FAILS) != (self.counterexample is not None):
            raise ValueError("a verdict FAILS exactly when it carries a counterexample")

    @property
    def holds(self) -> bool:
        return self.status.holds

    @property
    def axiom(self) -> str:
        return self.check


AxiomVerdict = Verdict


def default_region(c: Calculus, axiom: str) -> str:
    return "interior" if axiom in c.interior_axioms else "full"


def _fail(axiom, cex, notes, t, region):
    return Verdict(axiom, Status.FAILS, tuple(cex), notes, t, region)


def _ok(axiom, t, region, notes="", status=Status.HOLDS_SAMPLED):
    return Verdict(axiom, status, None, notes, t, region)


def _not_leq(c, a, b, eps):
    return not leq(c, a, b, eps, check=False)


def check_axiom(c: Calculus, axiom: str, t: Tolerance = Tolerance(), region: Optional[str] = None) -> Verdict:
    """Evaluate one axiom of ``c`` by seeded sampling."""
    axiom = axiom.upper()
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}")
    region = region or default_region(c, axiom)
    if region not in ("full", "interior"):
        raise ValueError(f"region must be 'full' or 'interior', got {region!r}")
    return _cached_check(c, axiom, t, region)


# verdicts are pure functions of their arguments
@functools.lru_cache(maxsize=512)
def _cached_check(c, axiom, t, region):
    return _CHECKS[axiom](c, t, region)


def _e1(c, t, region):
    samples = [s[0] for s in sample_tuples(c, "E1", 1, t, region)]
    if c.top is None:
        cand = core.finite_join(c, samples)
        for v in (*samples, tensor(c, cand, cand, t.eps, check=False)):
            if _not_leq(c, v, cand, t.eps):
                return _fail("E1", [cand, v], "no declared top; the largest sampled value is exceeded", t, region)
        return _fail("E1", [], "no declared top", t, region)
    for x in samples:
        if _not_leq(c, x, c.top, t.eps):
            return _fail("E1", [x, c.top], "sampled value above the declared top", t, region)
    return _ok("E1", t, region, "declared top bounds every sample", Status.HOLDS_STRUCTURAL)


def _e2(c, t, region):
    if "complete" not in c.flags:
        return _fail("E2", [], "not declared complete: the empty subset has no least upper bound", t, region)
    eps = t.eps
    for row in sample_tuples(c, "E2", 4, t, region):
        s, u = list(row[:3]), row[3]
        j, m = core.finite_join(c, s), core.finite_meet(c, s)
        bad = (
            any(_not_leq(c, v, j, eps) or _not_leq(c, m, v, eps) for v in s)
            or (c.top is not None and _not_leq(c, j, c.top, eps))
            or (all(leq(c, v, u, 0.0, check=False) for v in s) and _not_leq(c, j, u, eps))
            or (all(leq(c, u, v, 0.0, check=False) for v in s) and _not_leq(c, u, m, eps))
        )
        if bad:
            return _fail("E2", row, f"finite join/meet unsound for {s!r} against {u!r}", t, region)
    return _ok("E2", t, region, "declared complete; finite joins and meets sound on samples", Status.HOLDS_STRUCTURAL)


def _e3(c, t, region):
    one = c.unit
    for a, b in sample_tuples(c, "E3", 2, t, region):
        if leq(c, one, tensor(c, a, b, t.eps, check=False), t.eps, check=False):
            if _not_leq(c, one, a, t.eps) and _not_leq(c, one, b, t.eps):
                return _fail("E3", [a, b], "unit below the fusion but below neither factor", t, region)
    return _ok("E3", t, region)


def _e4(c, t, region):
    eps = t.eps
    if c.hom_fn is not None:
        for z, a, b in sample_tuples(c, "E4", 3, t, region):
            if not core.adjunction_holds(c, z, a, b, eps):
                lhs = leq(c, tensor(c, z, a, eps, check=False), b, eps, check=False)
                return _fail(
                    "E4", [z, a, b], f"adjunction broken: z(x)a<=b is {lhs}, z<=[a,b] is {not lhs}", t, region
                )
        return _ok("E4", t, region, "declared hom satisfies the adjunction on samples")
    if not c.bounded:
        return Verdict("E4", Status.NOT_APPLICABLE, None, "no declared hom and unbounded carrier", t, region)
    # grid-supremum route: a mismatch needs to survive one grid step
    step = (c.bounds[1] - c.bounds[0]) / t.grid_resolution
    n_pairs = max(1, math.ceil(t.sample_count / Z_PER_HOM))
    pairs = sample_tuples(c, "E4/ab", 2, t, region, n=n_pairs)
    zs = [r[0] for r in sample_tuples(c, "E4/z", 1, t, region)]
    specials = c.special_points(region == "interior")
    for i, (a, b) in enumerate(pairs):
        h = core.hom_by_sup(c, a, b, t)
        for z in (h, *specials, *zs[i * Z_PER_HOM:(i + 1) * Z_PER_HOM]):
            lhs = leq(c, tensor(c, z, a, eps, check=False), b, eps, check=False)
            if lhs and _not_leq(c, z, h, eps + step):
                return _fail("E4", [z, a, b, h], "z(x)a<=b but z is above the grid supremum", t, region)
            if not lhs and leq(c, z, h, eps, check=False):
                return _fail(
                    "E4", [z, a, b, h], "z below the supremum of {z | z(x)a<=b} yet z(x)a<=b fails", t, region
                )
    return _ok("E4", t, region, "grid-supremum hom satisfies the adjunction on samples")


def _e5(c, t, region):
    for x, y in sample_tuples(c, "E5", 2, t, region):
        if _not_leq(c, x, tensor(c, x, y, t.eps, check=False), t.eps):
            return _fail("E5", [x, y], "fusion lowered x", t, region)
    return _ok("E5", t, region)


def _e6(c, t, region):
    for (x,) in sample_tuples(c, "E6", 1, t, region):
        if not equal(c, tensor(c, x, x, t.eps, check=False), x, t.eps):
            return _fail("E6", [x], "x (x) x differs from x", t, region)
    return _ok("E6", t, region)


def fallibility_witness(c: Calculus, x, y, t: Tolerance, region: str = "full"):
    """First grid point z with x (x) z <= y, or None.

    The adjoined bottom is never offered as a witness, since it would make
    the search trivially succeed.
    """
    for z in c.grid(t.grid_resolution, region == "interior"):
        if is_bottom(z):
            continue
        if leq(c, tensor(c, x, z, t.eps, check=False), y, t.eps, check=False):
            return z
    return None


def _e7(c, t, region):
    for x, y in sample_tuples(c, "E7", 2, t, region):
        if c.top is not None and equal(c, x, c.top, t.eps):
            continue
        if fallibility_witness(c, x, y, t, region) is None:
            n = len(c.grid(t.grid_resolution, region == "interior"))
            return _fail(
                "E7", [x, y], f"no witness z among {n} grid points (resolution-bounded)", t, region
            )
    return _ok("E7", t, region)


def _e8(c, t, region):
    for a, b, z in sample_tuples(c, "E8", 3, t, region):
        ac = tensor(c, a, z, t.eps, check=False)
        bc = tensor(c, b, z, t.eps, check=False)
        if leq(c, ac, bc, 0.0, check=False) and _not_leq(c, a, b, t.eps):
            return _fail("E8", [a, b, z], "a(x)z <= b(x)z yet a is not below b", t, region)
    return _ok("E8", t, region)


def _laws(c, t, region):
    eps = t.eps
    for a, b, x, y in sample_tuples(c, "LAWS", 4, t, region):
        ab = tensor(c, a, b, eps, check=False)
        if not (is_bottom(ab) or c.validate(ab)):
            return _fail("LAWS", [a, b], "closure: fusion left the carrier", t, region)
        if not leq(c, a, a, 0.0, check=False):
            return _fail("LAWS", [a], "reflexivity", t, region)
        if leq(c, a, b, 0.0, check=False) and leq(c, b, x, 0.0, check=False) and _not_leq(c, a, x, eps):
            return _fail("LAWS", [a, b, x], "transitivity", t, region)
        if leq(c, a, b, 0.0, check=False) and leq(c, b, a, 0.0, check=False) and not equal(c, a, b, eps):
            return _fail("LAWS", [a, b], "antisymmetry", t, region)
        ba = tensor(c, b, a, eps, check=False)
        if not (ab == ba and type(ab) is type(ba)):
            return _fail("LAWS", [a, b], "commutativity", t, region)
        left = tensor(c, ab, x, eps, check=False)
        right = tensor(c, a, tensor(c, b, x, eps, check=False), eps, check=False)
        if not equal(c, left, right, eps):
            return _fail("LAWS", [a, b, x], "associativity", t, region)
        if not equal(c, tensor(c, a, c.unit, eps, check=False), a, eps):
            return _fail("LAWS", [a], "unit law", t, region)
        a2, b2 = core.finite_join(c, [a, x]), core.finite_join(c, [b, y])
        if _not_leq(c, ab, tensor(c, a2, b2, eps, check=False), eps):
            return _fail("LAWS", [a, b, a2, b2], "monotonicity", t, region)
    return _ok("LAWS", t, region, "order and monoidal laws hold on samples")


_CHECKS = {
    "E1": _e1,
    "E2": _e2,
    "E3": _e3,
    "E4": _e4,
    "E5": _e5,
    "E6": _e6,
    "E7": _e7,
    "E8": _e8,
    "LAWS": _laws,
}


@dataclass
class AxiomTable:
    rows: dict
    tolerance: Tolerance
    caveats: dict = field(default_factory=dict)

    def pattern(self) -> dict:
        """Calculus id -> set of table axioms that hold."""
        return {
            cid: {a for a, v in row.items() if a in TABLE_AXIOMS and v.holds} for cid, row in self.rows.items()
        }


def axiom_table(cs, t: Tolerance = Tolerance(), region: Optional[str] = None, axioms=AXIOMS) -> AxiomTable:
    """Verdict for every calculus x axiom pair.

    ``region=None`` uses each calculus' default region per axiom (the CF
    row evaluates E4, E8 and LAWS on the open interval).
    """
    cs = list(cs)
    if not cs:
        raise ValueError("axiom_table needs at least one calculus")
    rows, caveats = {}, {}
    for c in cs:
        rows[c.id] = {a: check_axiom(c, a, t, region) for a in axioms}
        if c.caveats and region != "full":
            caveats[c.id] = list(c.caveats)
    return AxiomTable(rows, t, caveats)


@dataclass
class NoGoReport:
    calculus: str
    consistent: bool
    violations: list
    verdicts: dict


def check_no_go(c: Calculus, t: Tolerance = Tolerance(), verdicts: Optional[dict] = None) -> NoGoReport:
    """Confirm on computed verdicts that not (E4 and E5 and E8) and E4 <=> E7."""
    if "complete" not in c.flags:
        raise PreconditionUnmet(f"{c.id} is not declared complete", ["complete"])
    verdicts = dict(verdicts or {})
    for a in ("E4", "E5", "E7", "E8"):
        if a not in verdicts:
            verdicts[a] = check_axiom(c, a, t)
    h = {a: v.holds for a, v in verdicts.items()}
    violations = []
    if h["E4"] and h["E5"] and h["E8"]:
        violations.append("E4 and E5 and E8 all hold (closed, strongly conservative and cancellative)")
    if h["E4"] != h["E7"]:
        violations.append(f"E4 <=> E7 broken: E4 {'holds' if h['E4'] else 'fails'}, E7 {'holds' if h['E7'] else 'fails'}")
    return NoGoReport(c.id, not violations, violations, verdicts)


@dataclass
class IdempotentMinReport:
    calculus: str
    holds: bool
    counterexample: Optional[tuple]
    samples: int


def check_idempotent_min(c: Calculus, t: Tolerance = Tolerance()) -> IdempotentMinReport:
    """On a total order with unit = top, idempotent fusion must be min."""
    unmet = []
    if "total_order" not in c.flags:
        unmet.append("total order")
    e6 = check_axiom(c, "E6", t)
    if not e6.holds:
        unmet.append(f"E6 (idempotency) fails at {e6.counterexample!r}")
    if c.top is None or not equal(c, c.unit, c.top, t.eps):
        unmet.append(f"unit {c.unit!r} is not the top {c.top!r}")
    if unmet:
        raise PreconditionUnmet(f"{c.id}: " + "; ".join(unmet), unmet)
    samples = sample_tuples(c, "idempotent_min", 2, t)
    for x, y in samples:
        if not equal(c, tensor(c, x, y, t.eps, check=False), core.min_by_order(c, x, y), t.eps):
            return IdempotentMinReport(c.id, False, (x, y), len(samples))
    return IdempotentMinReport(c.id, True, None, len(samples))
