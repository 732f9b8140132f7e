"""Carrier values, the calculus descriptor and the generic algorithms on it.

Every calculus is a symmetric monoidal poset: a carrier with a partial
order, a commutative fusion operation and a unit.  Values are plain floats
for scalar carriers, :class:`Pair` for bipolar possibility and
:class:`Interval` for interval probabilities; :data:`BOTTOM` is the adjoined
contradiction element of the pair/interval calculi.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    EmptyInput,
    HomUnavailable,
    InvalidValue,
    NoWitness,
    NotComplete,
    PreconditionUnmet,
)

DEFAULT_EPS = 1e-9

SCALAR = "scalar"
PAIR = "pair"
INTERVAL = "interval"

FLAGS = frozenset({"has_top", "complete", "closed", "total_order"})


@dataclass(frozen=True, slots=True)
class Pair:
    """Bipolar possibility value: rejection degree ``r``, possibility ``p``."""

    r: float
    p: float


@dataclass(frozen=True, slots=True)
class Interval:
    lo: float
    hi: float


class _Bottom:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


def is_bottom(v) -> bool:
    return v is BOTTOM


def is_scalar(v) -> bool:
    return isinstance(v, (int, float, np.floating)) and not isinstance(v, bool)


@dataclass(frozen=True)
class Tolerance:
    """Numeric and sampling effort shared by all checks."""

    eps: float = DEFAULT_EPS
    grid_resolution: int = 1024
    sample_count: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError(f"eps must be positive, got {self.eps}")
        if self.grid_resolution < 1 or self.sample_count < 1:
            raise ValueError("grid_resolution and sample_count must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True, eq=False)
class Calculus:
    """Descriptor of one epistemic calculus.

    ``leq_fn`` and ``tensor_fn`` only ever see non-bottom values; the
    adjoined :data:`BOTTOM` (when ``adjoined_bottom`` is set) is handled
    generically as the absorbing least element.  ``leq_fn`` takes a third
    argument, the tolerance under which nearly equal values compare equal.
    """

    id: str
    check: Callable[[Any], None]
    leq_fn: Callable[[Any, Any, float], bool]
    tensor_fn: Callable[[Any, Any, float], Any]
    unit: Any
    hom_fn: Optional[Callable[[Any, Any], Any]] = None
    top: Any = None
    bottom: Any = None
    flags: frozenset = frozenset()
    kind: str = SCALAR
    bounds: tuple = (-math.inf, math.inf)
    adjoined_bottom: bool = False
    join_fn: Optional[Callable[[list], Any]] = None
    meet_fn: Optional[Callable[[list], Any]] = None
    # region used for sampling an unbounded scalar carrier and for its grid
    sample_range: tuple = (1e-3, 1e3)
    grid_range: tuple = (1e-9, 1e9)
    # axioms whose default evaluation region is the interior
    interior_axioms: frozenset = frozenset()
    caveats: tuple = ()
    description: str = ""

    def __post_init__(self):
        unknown = set(self.flags) - FLAGS
        if unknown:
            raise ValueError(f"unknown flags {sorted(unknown)}")
        self.check(self.unit)
        for v in (self.top, self.bottom):
            if v is not None and not (v is BOTTOM and self.adjoined_bottom):
                self.check(v)

    def __repr__(self):
        return f"Calculus({self.id!r})"

    def validate(self, v) -> bool:
        try:
            self.check(v)
        except InvalidValue:
            return False
        return True

    @property
    def closed(self) -> bool:
        return self.hom_fn is not None

    @property
    def bounded(self) -> bool:
        return self.kind != SCALAR or all(map(math.isfinite, self.bounds))

    # carrier geometry -------------------------------------------------

    def from_uniform(self, u: Sequence[float], interior: bool = False):
        """Map one or two uniforms in [0, 1) to a carrier point."""
        if self.kind == SCALAR:
            if self.bounded:
                lo, hi = self.bounds
                x = lo + float(u[0]) * (hi - lo)
                if interior:
                    x = min(max(x, math.nextafter(lo, hi)), math.nextafter(hi, lo))
                return x
            lo, hi = self.sample_range
            return float(math.exp(math.log(lo) + float(u[0]) * (math.log(hi) - math.log(lo))))
        a, b = sorted((float(u[0]), float(u[1])))
        if interior:
            a = max(a, math.nextafter(0.0, 1.0))
            b = min(b, math.nextafter(1.0, 0.0))
        return Pair(a, b) if self.kind == PAIR else Interval(a, b)

    @property
    def dims(self) -> int:
        return 1 if self.kind == SCALAR else 2

    def special_points(self, interior: bool = False) -> list:
        """Distinguished points always included in sampling."""
        pts = [self.unit]
        if interior:
            if self.kind == SCALAR and self.bounded and self.unit in self.bounds:
                return []
            return pts
        for v in (self.top, self.bottom):
            if v is not None:
                pts.append(v)
        if self.kind == SCALAR:
            lo, hi = self.bounds if self.bounded else self.sample_range
            pts += [lo, hi]
        else:
            mk = Pair if self.kind == PAIR else Interval
            pts += [mk(0.0, 0.0), mk(0.0, 1.0), mk(1.0, 1.0), mk(0.5, 0.5)]
        if self.adjoined_bottom:
            pts.append(BOTTOM)
        out = []
        for v in pts:
            if not any(_same(v, w) for w in out):
                out.append(v)
        return out

    def grid(self, resolution: int, interior: bool = False) -> tuple:
        """Search grid: specials first, then the regular grid in order."""
        return _grid(self, resolution, interior)


def _same(a, b) -> bool:
    return type(a) is type(b) and a == b


@functools.lru_cache(maxsize=32)
def _grid(c: Calculus, resolution: int, interior: bool) -> tuple:
    pts = list(c.special_points(interior))
    if c.kind == SCALAR:
        if c.bounded:
            xs = np.linspace(c.bounds[0], c.bounds[1], resolution + 1)
        else:
            xs = np.geomspace(c.grid_range[0], c.grid_range[1], resolution + 1)
        if interior:
            xs = xs[1:-1]
        pts += [float(x) for x in xs]
    else:
        xs = [float(x) for x in np.linspace(0.0, 1.0, resolution + 1)]
        if interior:
            xs = xs[1:-1]
        mk = Pair if c.kind == PAIR else Interval
        pts += [mk(a, b) for i, a in enumerate(xs) for b in xs[i:]]
    return tuple(pts)


# scalar comparisons -----------------------------------------------------


def scalar_leq(a: float, b: float, eps: float) -> bool:
    """``a <= b`` where differences within eps (relative above 1) count as equal."""
    return a <= b + eps * max(1.0, abs(a), abs(b))


def scalar_close(a: float, b: float, eps: float) -> bool:
    return abs(a - b) <= eps * max(1.0, abs(a), abs(b))


# generic operations -----------------------------------------------------


def _checked(c: Calculus, *vs):
    for v in vs:
        if is_bottom(v):
            if not c.adjoined_bottom:
                raise InvalidValue(f"{c.id} has no bottom element")
            continue
        c.check(v)


def leq(c: Calculus, a, b, eps: float = DEFAULT_EPS, check: bool = True) -> bool:
    """Whether ``a <= b`` in the order of ``c``."""
    if check:
        _checked(c, a, b)
    if is_bottom(a):
        return True
    if is_bottom(b):
        return False
    return c.leq_fn(a, b, eps)


def equal(c: Calculus, a, b, eps: float = DEFAULT_EPS) -> bool:
    """Equality up to eps: mutual order for partial orders, closeness for scalars."""
    if is_bottom(a) or is_bottom(b):
        return is_bottom(a) and is_bottom(b)
    if c.kind == SCALAR:
        return scalar_close(a, b, eps)
    return leq(c, a, b, eps, check=False) and leq(c, b, a, eps, check=False)


def tensor(c: Calculus, a, b, eps: float = DEFAULT_EPS, check: bool = True):
    """Fuse two values."""
    if check:
        _checked(c, a, b)
    if is_bottom(a) or is_bottom(b):
        return BOTTOM
    return c.tensor_fn(a, b, eps)


def fuse_all(c: Calculus, vs: Iterable, eps: float = DEFAULT_EPS):
    """Left fold of :func:`tensor` over ``vs``."""
    vs = list(vs)
    if not vs:
        raise EmptyInput("fuse_all needs at least one value")
    _checked(c, *vs)
    acc = vs[0]
    for v in vs[1:]:
        acc = tensor(c, acc, v, eps, check=False)
    return acc


def hom(c: Calculus, a, b, tolerance: Optional[Tolerance] = None):
    """Internal hom ``[a, b]``, read "a implies b".

    Uses the declared hom when there is one; complete scalar calculi fall
    back to :func:`hom_by_sup`.
    """
    _checked(c, a, b)
    if c.hom_fn is not None:
        return c.hom_fn(a, b)
    if "complete" in c.flags and c.kind == SCALAR and c.bounded:
        return hom_by_sup(c, a, b, tolerance or Tolerance())
    raise HomUnavailable(f"{c.id} declares no internal hom")


def hom_by_sup(c: Calculus, a, b, tolerance: Tolerance = Tolerance()):
    """Grid supremum of ``{z | z (x) a <= b}``.

    The candidate set is the carrier grid plus ``a``, ``b`` and the unit, so
    exact answers landing on those points are found exactly.
    """
    if not c.bounded:
        raise PreconditionUnmet(
            f"hom_by_sup needs a bounded carrier; {c.id} is unbounded",
            ["bounded carrier"],
        )
    _checked(c, a, b)
    eps = tolerance.eps
    extra = [v for v in (a, b, c.unit) if not is_bottom(v)]
    points = (*c.grid(tolerance.grid_resolution), *extra)
    if is_bottom(a):
        cands = list(points)
    else:
        # inlined tensor/leq: this loop runs over the full product grid
        tf, lf = c.tensor_fn, c.leq_fn
        b_bot = is_bottom(b)
        cands = []
        for z in points:
            if z is BOTTOM:
                cands.append(z)
                continue
            m = tf(z, a, eps)
            if m is BOTTOM or (not b_bot and lf(m, b, eps)):
                cands.append(z)
    if not cands:
        if c.bottom is not None:
            return c.bottom
        if c.adjoined_bottom:
            return BOTTOM
        raise NoWitness(f"no grid point z with z (x) {a!r} <= {b!r} in {c.id}")
    return finite_join(c, cands)


def finite_join(c: Calculus, vs: Sequence):
    """Least upper bound of a finite non-empty list (no completeness check)."""
    vs = [v for v in vs if not is_bottom(v)]
    if not vs:
        return BOTTOM
    if c.join_fn is not None:
        return c.join_fn(vs)
    if "total_order" not in c.flags:
        raise NotComplete(f"{c.id} has no finite joins")
    best = vs[0]
    for v in vs[1:]:
        if not leq(c, v, best, 0.0, check=False):
            best = v
    return best


def finite_meet(c: Calculus, vs: Sequence):
    if any(is_bottom(v) for v in vs):
        return BOTTOM
    if c.meet_fn is not None:
        return c.meet_fn(list(vs))
    if "total_order" not in c.flags:
        raise NotComplete(f"{c.id} has no finite meets")
    best = vs[0]
    for v in vs[1:]:
        if not leq(c, best, v, 0.0, check=False):
            best = v
    return best


def join(c: Calculus, vs: Iterable):
    """Least upper bound of a finite set in a complete calculus."""
    return _lattice_op(c, vs, finite_join, "join")


def meet(c: Calculus, vs: Iterable):
    return _lattice_op(c, vs, finite_meet, "meet")


def _lattice_op(c, vs, op, name):
    if "complete" not in c.flags:
        raise NotComplete(f"{c.id} is not declared complete; {name} unavailable")
    vs = list(vs)
    if not vs:
        raise EmptyInput(f"{name} of an empty list")
    _checked(c, *vs)
    return op(c, vs)


def min_by_order(c: Calculus, a, b):
    return a if leq(c, a, b, 0.0, check=False) else b


def adjunction_holds(c: Calculus, z, a, b, eps: float = DEFAULT_EPS) -> bool:
    """``z (x) a <= b  <=>  z <= [a, b]`` for the declared hom.

    A disagreement only counts when it shows up both under exact comparison
    and under eps tolerance, so values straddling the eps band are not
    reported.
    """
    fused, h = tensor(c, z, a, eps, check=False), c.hom_fn(a, b)
    return any(
        leq(c, fused, b, e, check=False) == leq(c, z, h, e, check=False) for e in (0.0, eps)
    )
