"""Seeded, index-addressable sampling of carrier tuples.

Row ``i`` of a draw depends only on the seed, the calculus id, the check
name and ``i``, so any slice of the rows can be evaluated independently and
in any order with the same outcome.
"""

from __future__ import annotations

import itertools
import zlib

import numpy as np

from .core import Calculus, Tolerance

SPECIAL_RATE = 0.1


def stream_key(*parts) -> int:
    return zlib.crc32(":".join(map(str, parts)).encode())


def uniform_rows(seed: int, key: int, n: int, width: int) -> np.ndarray:
    rng = np.random.default_rng([seed, key])
    return rng.random((n, width))


def sample_tuples(c: Calculus, check: str, k: int, t: Tolerance, region: str = "full", n=None):
    """``n`` (default ``t.sample_count``) k-tuples of carrier points.

    Leading rows enumerate combinations of the special points (unit, top,
    bottom, carrier bounds); the rest are PRNG draws in which each slot is
    replaced by a special point with probability ``SPECIAL_RATE``.
    """
    n = t.sample_count if n is None else n
    interior = region == "interior"
    specials = c.special_points(interior)
    combos = list(itertools.islice(itertools.product(specials, repeat=k), n)) if specials else []
    d = c.dims
    u = uniform_rows(t.seed, stream_key(c.id, check, k, region), n, k * (d + 2))
    out = combos
    for row in u[len(combos):]:
        vals = []
        for j in range(k):
            base = j * (d + 2)
            if specials and row[base + d] < SPECIAL_RATE:
                vals.append(specials[int(row[base + d + 1] * len(specials))])
            else:
                vals.append(c.from_uniform(row[base:base + d], interior))
        out.append(tuple(vals))
    return out
