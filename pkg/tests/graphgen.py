"""Random hypothesis graphs for tests."""

import numpy as np

from epicalc import HypothesisGraph, get_calculus
from epicalc.core import finite_join, tensor


def names(n):
    return tuple(f"H{i}" for i in range(n))


def random_table(c, objs, rng, interior=False, levels=None):
    """Unconstrained hom table; ``levels`` draws PT values from a finite set."""
    homs = {}
    for a in objs:
        for b in objs:
            if levels is not None:
                homs[a, b] = float(rng.choice(levels))
            else:
                homs[a, b] = c.from_uniform(rng.random(c.dims), interior)
    return homs


def close_lax(c, objs, homs, max_rounds=None):
    """Raise homs until identity and composition hold laxly."""
    homs = dict(homs)
    for a in objs:
        homs[a, a] = c.unit
    for _ in range(max_rounds or len(objs) + 1):
        changed = False
        for a in objs:
            for b in objs:
                for d in objs:
                    fused = tensor(c, homs[b, d], homs[a, b], check=False)
                    new = finite_join(c, [homs[a, d], fused])
                    if new != homs[a, d]:
                        homs[a, d], changed = new, True
        if not changed:
            break
    for a in objs:
        homs[a, a] = c.unit
    return homs


def random_lax_graph(cid, rng, n_min=2, n_max=6):
    c = get_calculus(cid)
    objs = names(int(rng.integers(n_min, n_max + 1)))
    homs = close_lax(c, objs, random_table(c, objs, rng))
    return HypothesisGraph(c, objs, homs, "lax")


def rng(seed):
    return np.random.default_rng(seed)
