"""Changes of calculi and their classification.

A map F between calculi is *conservative* when it is monotone and lax
(``F(x) (x) F(y) <= F(x (x) y)``, ``1 <= F(1)``), *liberal* when monotone
and op-lax (the reverse inequalities), *balanced* when both.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Any, Callable

from . import core
from .axioms import Status, Verdict
from .core import BOTTOM, Calculus, Interval, Pair, Tolerance, is_bottom, leq, tensor
from .errors import MismatchedCalculi, UnknownMap
from .instances import get_calculus
from .sampling import sample_tuples

CONSERVATIVE = "conservative"
LIBERAL = "liberal"
BALANCED = "balanced"
NEITHER = "neither"


@dataclass(frozen=True, eq=False)
class CalculusMap:
    source: Calculus
    target: Calculus
    apply: Callable[[Any], Any]
    name: str

    def __call__(self, v):
        return self.apply(v)

    def __repr__(self):
        return f"CalculusMap({self.name!r}: {self.source.id} -> {self.target.id})"


@dataclass(frozen=True)
class MapClassification:
    name: str
    monotone: Verdict
    lax: Verdict
    oplax: Verdict
    lax_unit: Verdict
    oplax_unit: Verdict

    @property
    def conservative(self) -> bool:
        return self.monotone.holds and self.lax.holds and self.lax_unit.holds

    @property
    def liberal(self) -> bool:
        return self.monotone.holds and self.oplax.holds and self.oplax_unit.holds

    @property
    def summary(self) -> str:
        if self.conservative and self.liberal:
            return BALANCED
        if self.conservative:
            return CONSERVATIVE
        if self.liberal:
            return LIBERAL
        return NEITHER

    def verdicts(self) -> dict:
        return {
            "monotone": self.monotone,
            "lax": self.lax,
            "oplax": self.oplax,
            "lax_unit": self.lax_unit,
            "oplax_unit": self.oplax_unit,
        }


def classify(F: CalculusMap, t: Tolerance = Tolerance()) -> MapClassification:
    """Sampled classification of ``F`` as conservative, liberal or balanced."""
    return _classify(F, t)


@functools.lru_cache(maxsize=128)
def _classify(F, t):
    V, W, eps = F.source, F.target, t.eps

    def verdict(check, cex, notes):
        if cex is None:
            return Verdict(check, Status.HOLDS_SAMPLED, None, "", t)
        return Verdict(check, Status.FAILS, tuple(cex), notes, t)

    pairs = sample_tuples(V, f"classify:{F.name}", 2, t)

    mono = None
    for x, y in pairs:
        hi = core.finite_join(V, [x, y])
        for a, b in ((x, hi), (y, hi), (x, y)):
            if leq(V, a, b, 0.0, check=False) and not leq(W, F(a), F(b), eps, check=False):
                mono = [a, b]
                break
        if mono:
            break

    lax = oplax = None
    for x, y in pairs:
        fused = F(tensor(V, x, y, eps, check=False))
        images = tensor(W, F(x), F(y), eps, check=False)
        if lax is None and not leq(W, images, fused, eps, check=False):
            lax = [x, y]
        if oplax is None and not leq(W, fused, images, eps, check=False):
            oplax = [x, y]
        if lax and oplax:
            break

    f1 = F(V.unit)
    lax_unit = None if leq(W, W.unit, f1, eps, check=False) else [V.unit, f1]
    oplax_unit = None if leq(W, f1, W.unit, eps, check=False) else [V.unit, f1]

    def unit_verdict(check, cex, notes):
        if cex is None:
            return Verdict(check, Status.HOLDS_STRUCTURAL, None, "exact check on the unit", t)
        return Verdict(check, Status.FAILS, tuple(cex), notes, t)

    return MapClassification(
        F.name,
        verdict("monotone", mono, "x <= y but F(x) is not below F(y)"),
        verdict("lax", lax, "F(x) (x) F(y) is above F(x (x) y)"),
        verdict("oplax", oplax, "F(x (x) y) is above F(x) (x) F(y)"),
        unit_verdict("lax_unit", lax_unit, "target unit is not below F(unit)"),
        unit_verdict("oplax_unit", oplax_unit, "F(unit) is not below the target unit"),
    )


# built-in maps -----------------------------------------------------------


def identity(c: Calculus) -> CalculusMap:
    return CalculusMap(c, c, lambda v: v, f"identity:{c.id}")


def _pair_to_interval(v):
    return BOTTOM if is_bottom(v) else Interval(v.r, v.p)


def _interval_to_pair(v):
    return BOTTOM if is_bottom(v) else Pair(v.lo, v.hi)


def ptb_to_ip() -> CalculusMap:
    return CalculusMap(get_calculus("PTB"), get_calculus("IP"), _pair_to_interval, "ptb_to_ip")


def ip_to_ptb() -> CalculusMap:
    return CalculusMap(get_calculus("IP"), get_calculus("PTB"), _interval_to_pair, "ip_to_ptb")


def pt_to_cf() -> CalculusMap:
    """Affine rescaling x -> 2x - 1."""
    return CalculusMap(get_calculus("PT"), get_calculus("CF"), lambda x: 2.0 * x - 1.0, "pt_to_cf")


def _ptb_cf(v):
    # no contradiction element in CF: Bottom goes to total disbelief
    if is_bottom(v):
        return -1.0
    return v.p - (1.0 - v.r)


def ptb_to_cf() -> CalculusMap:
    """Possibility minus non-rejectedness, (r, p) -> p - (1 - r)."""
    return CalculusMap(get_calculus("PTB"), get_calculus("CF"), _ptb_cf, "ptb_to_cf")


def pt_to_cf_power(k: float = 1.0) -> CalculusMap:
    """x -> x**k - 1: monotone into [-1, 0] with 1 -> 0, hence conservative."""
    if not k > 0:
        raise ValueError("exponent must be positive")
    name = "pt_to_cf_shift" if k == 1.0 else f"pt_to_cf_power:{k!r}"
    return CalculusMap(get_calculus("PT"), get_calculus("CF"), lambda x: x**k - 1.0, name)


def compose(F: CalculusMap, G: CalculusMap) -> CalculusMap:
    """Apply ``F`` then ``G``."""
    if F.target.id != G.source.id:
        raise MismatchedCalculi(f"cannot compose {F.name} ({F.target.id}) with {G.name} ({G.source.id})")
    return CalculusMap(F.source, G.target, lambda v: G.apply(F.apply(v)), f"{F.name}>>{G.name}")


_BUILTINS = {
    "ptb_to_ip": ptb_to_ip,
    "ip_to_ptb": ip_to_ptb,
    "pt_to_cf": pt_to_cf,
    "ptb_to_cf": ptb_to_cf,
    "pt_to_cf_shift": pt_to_cf_power,
}

MAP_NAMES = (*_BUILTINS, "identity:<calc>")


@functools.lru_cache(maxsize=None)
def get_map(name: str) -> CalculusMap:
    """Built-in map by stable name; ``a>>b`` composes built-ins."""
    if ">>" in name:
        parts = [get_map(p.strip()) for p in name.split(">>")]
        return functools.reduce(compose, parts)
    if name.startswith("identity:"):
        return identity(get_calculus(name.split(":", 1)[1]))
    if name not in _BUILTINS:
        raise UnknownMap(f"unknown map {name!r}; expected one of {', '.join(MAP_NAMES)}")
    return _BUILTINS[name]()
