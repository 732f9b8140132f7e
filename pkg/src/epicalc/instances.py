"""The bundled calculi: certainty factors, possibility theory and friends."""

from __future__ import annotations

import math

from .core import (
    BOTTOM,
    INTERVAL,
    PAIR,
    SCALAR,
    Calculus,
    Interval,
    Pair,
    is_scalar,
    scalar_leq,
)
from .errors import InvalidValue, UnknownCalculus

INSTANCE_IDS = ("CF", "PT", "PTMAX", "PTB", "IP", "LR")

CF_BOUNDARY_CAVEAT = (
    "CF extremes: (1 (x) -1) (x) -1 = -1 but 1 (x) (-1 (x) -1) = 0, so associativity, "
    "cancellativity and the hom adjunction only hold on the open interval (-1, 1); "
    "E4, E8 and LAWS for CF are evaluated on the interior."
)


def _scalar_check(cid, lo, hi, lo_open=False, hi_open=False):
    def check(v):
        if not is_scalar(v):
            raise InvalidValue(f"{cid} expects a real number, got {v!r}")
        if not math.isfinite(v):
            raise InvalidValue(f"{cid} value {v!r} is not finite")
        if v < lo or (lo_open and v == lo):
            raise InvalidValue(f"{cid} value {v!r} is below the carrier bound {lo}")
        if v > hi or (hi_open and v == hi):
            raise InvalidValue(f"{cid} value {v!r} is above the carrier bound {hi}")

    return check


def _unit_pair_check(cid, cls, first, second):
    def check(v):
        if not isinstance(v, cls):
            raise InvalidValue(f"{cid} expects {cls.__name__}, got {v!r}")
        x, y = getattr(v, first), getattr(v, second)
        for name, comp in ((first, x), (second, y)):
            if not is_scalar(comp) or not math.isfinite(comp):
                raise InvalidValue(f"{cid} component {name}={comp!r} is not a finite real")
            if not 0.0 <= comp <= 1.0:
                raise InvalidValue(f"{cid} component {name}={comp!r} lies outside [0, 1]")
        if x > y:
            raise InvalidValue(f"{cid} component {first}={x!r} exceeds {second}={y!r}")

    return check


def _leq_scalar(a, b, eps):
    return scalar_leq(a, b, eps)


# CF ---------------------------------------------------------------------


def phi(x: float) -> float:
    """Order isomorphism (-1, 1) -> (0, inf) turning fusion into multiplication."""
    return (1.0 + x) / (1.0 - x)


def phi_inv(y: float) -> float:
    return (y - 1.0) / (y + 1.0)


def cf_tensor(x, y, eps=0.0):
    """Hyperbolic sum, extended to the extremes -1 and 1."""
    if x == 1.0 or y == 1.0:
        return 0.0 if -1.0 in (x, y) else 1.0
    if x == -1.0 or y == -1.0:
        return -1.0
    z = (x + y) / (1.0 + x * y)
    return min(1.0, max(-1.0, z))


def cf_hom(a, b):
    """Hyperbolic subtraction ``(b - a) / (1 - ab)``.

    At ``a = +-1`` the formula is undefined; the value returned there is the
    supremum of ``{z | z (x) a <= b}``, although the adjunction itself does
    not hold at those points.
    """
    if a == 1.0:
        return 1.0 if b == 1.0 else -1.0
    if a == -1.0:
        return 1.0
    if b == 1.0 or b == -1.0:
        return b
    z = (b - a) / (1.0 - a * b)
    return min(1.0, max(-1.0, z))


def make_cf() -> Calculus:
    return Calculus(
        id="CF",
        check=_scalar_check("CF", -1.0, 1.0),
        leq_fn=_leq_scalar,
        tensor_fn=cf_tensor,
        unit=0.0,
        hom_fn=cf_hom,
        top=1.0,
        bottom=-1.0,
        flags=frozenset({"has_top", "complete", "closed", "total_order"}),
        kind=SCALAR,
        bounds=(-1.0, 1.0),
        interior_axioms=frozenset({"E4", "E8", "LAWS"}),
        caveats=(CF_BOUNDARY_CAVEAT,),
        description="certainty factors on [-1, 1] under the hyperbolic sum",
    )


# PT / PTMAX -------------------------------------------------------------


def godel_hom(a, b):
    return 1.0 if a <= b else b


def make_pt() -> Calculus:
    return Calculus(
        id="PT",
        check=_scalar_check("PT", 0.0, 1.0),
        leq_fn=_leq_scalar,
        tensor_fn=lambda x, y, eps=0.0: min(x, y),
        unit=1.0,
        hom_fn=godel_hom,
        top=1.0,
        bottom=0.0,
        flags=frozenset({"has_top", "complete", "closed", "total_order"}),
        kind=SCALAR,
        bounds=(0.0, 1.0),
        description="possibility theory on [0, 1] under min",
    )


def make_ptmax() -> Calculus:
    return Calculus(
        id="PTMAX",
        check=_scalar_check("PTMAX", 0.0, 1.0),
        leq_fn=_leq_scalar,
        tensor_fn=lambda x, y, eps=0.0: max(x, y),
        unit=0.0,
        top=1.0,
        bottom=0.0,
        flags=frozenset({"has_top", "complete", "total_order"}),
        kind=SCALAR,
        bounds=(0.0, 1.0),
        description="max-possibility on [0, 1]; strongly conservative",
    )


# PTB / IP ---------------------------------------------------------------


def _cut(lo, hi, eps, mk):
    # max > min by more than eps is a contradiction; within eps collapse
    if lo > hi + eps:
        return BOTTOM
    if lo > hi:
        mid = 0.5 * (lo + hi)
        return mk(mid, mid)
    return mk(lo, hi)


def _ptb_leq(a: Pair, b: Pair, eps):
    return a.r >= b.r - eps and a.p <= b.p + eps


def _ptb_tensor(a: Pair, b: Pair, eps=1e-9):
    return _cut(max(a.r, b.r), min(a.p, b.p), eps, Pair)


def make_ptb() -> Calculus:
    return Calculus(
        id="PTB",
        check=_unit_pair_check("PTB", Pair, "r", "p"),
        leq_fn=_ptb_leq,
        tensor_fn=_ptb_tensor,
        unit=Pair(0.0, 1.0),
        top=Pair(0.0, 1.0),
        bottom=BOTTOM,
        flags=frozenset({"has_top", "complete"}),
        kind=PAIR,
        bounds=(0.0, 1.0),
        adjoined_bottom=True,
        join_fn=lambda vs: Pair(min(v.r for v in vs), max(v.p for v in vs)),
        meet_fn=lambda vs: _cut(max(v.r for v in vs), min(v.p for v in vs), 0.0, Pair),
        description="bipolar possibility (rejection, possibility) under (max, min)",
    )


def _ip_leq(a: Interval, b: Interval, eps):
    return a.lo >= b.lo - eps and a.hi <= b.hi + eps


def _ip_tensor(a: Interval, b: Interval, eps=1e-9):
    return _cut(max(a.lo, b.lo), min(a.hi, b.hi), eps, Interval)


def make_ip() -> Calculus:
    return Calculus(
        id="IP",
        check=_unit_pair_check("IP", Interval, "lo", "hi"),
        leq_fn=_ip_leq,
        tensor_fn=_ip_tensor,
        unit=Interval(0.0, 1.0),
        top=Interval(0.0, 1.0),
        bottom=BOTTOM,
        flags=frozenset({"has_top", "complete"}),
        kind=INTERVAL,
        bounds=(0.0, 1.0),
        adjoined_bottom=True,
        join_fn=lambda vs: Interval(min(v.lo for v in vs), max(v.hi for v in vs)),
        meet_fn=lambda vs: _cut(max(v.lo for v in vs), min(v.hi for v in vs), 0.0, Interval),
        description="closed subintervals of [0, 1] under containment and intersection",
    )


# LR ---------------------------------------------------------------------


def make_lr() -> Calculus:
    return Calculus(
        id="LR",
        check=_scalar_check("LR", 0.0, math.inf, lo_open=True),
        leq_fn=_leq_scalar,
        tensor_fn=lambda x, y, eps=0.0: x * y,
        unit=1.0,
        hom_fn=lambda a, b: b / a,
        flags=frozenset({"closed", "total_order"}),
        kind=SCALAR,
        bounds=(0.0, math.inf),
        description="likelihood ratios on (0, inf) under multiplication",
    )


_CONSTRUCTORS = {
    "CF": make_cf,
    "PT": make_pt,
    "PTMAX": make_ptmax,
    "PTB": make_ptb,
    "IP": make_ip,
    "LR": make_lr,
}
_CACHE: dict = {}


def get_calculus(cid: str) -> Calculus:
    """Shared instance for a stable id (case-insensitive)."""
    key = cid.upper()
    if key not in _CONSTRUCTORS:
        raise UnknownCalculus(f"unknown calculus {cid!r}; expected one of {', '.join(INSTANCE_IDS)}")
    if key not in _CACHE:
        _CACHE[key] = _CONSTRUCTORS[key]()
    return _CACHE[key]
