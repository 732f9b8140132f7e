import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epicalc import BOTTOM, Interval, Pair, Tolerance, fuse_all, hom, hom_by_sup, join, leq, meet, tensor
from epicalc.core import adjunction_holds, equal
from epicalc.errors import EmptyInput, HomUnavailable, InvalidValue, NotComplete, PreconditionUnmet


def phi(x):
    return (1 + x) / (1 - x)


def phi_inv(y):
    return (y - 1) / (y + 1)


interior = st.floats(-0.999, 0.999)
unit_iv = st.floats(0.0, 1.0)


# leq ----------------------------------------------------------------------


def test_leq_examples(cf, ptb, ip):
    assert leq(cf, 0.2, 0.7)
    assert leq(ptb, Pair(0.5, 0.8), Pair(0.3, 0.9))
    assert not leq(ip, Interval(0.4, 0.6), Interval(0.5, 0.9))


def test_leq_partial_order_incomparable(ip):
    a, b = Interval(0.1, 0.3), Interval(0.2, 0.6)
    assert not leq(ip, a, b) and not leq(ip, b, a)


def test_bottom_is_least(ptb, ip):
    for c, v in ((ptb, Pair(0.2, 0.4)), (ip, Interval(0.2, 0.4))):
        assert leq(c, BOTTOM, v)
        assert not leq(c, v, BOTTOM)
        assert leq(c, BOTTOM, BOTTOM)


@pytest.mark.parametrize(
    "cid, bad, fragment",
    [
        ("CF", 1.5, "above"),
        ("PT", -0.1, "below"),
        ("PTB", Pair(0.8, 0.3), "r=0.8 exceeds p=0.3"),
        ("IP", Interval(0.2, 1.2), "hi=1.2"),
        ("LR", 0.0, "below"),
        ("CF", BOTTOM, "no bottom"),
        ("CF", float("nan"), "not finite"),
    ],
)
def test_invalid_value_names_component(cid, bad, fragment):
    from epicalc import get_calculus

    c = get_calculus(cid)
    with pytest.raises(InvalidValue, match=fragment):
        leq(c, bad, c.unit)


# tensor / fuse_all -------------------------------------------------------------


def test_cf_tensor_matches_phi_oracle(cf):
    assert tensor(cf, 0.5, 0.5) == pytest.approx(phi_inv(phi(0.5) * phi(0.5)), abs=1e-15)
    assert tensor(cf, 0.5, 0.5) == pytest.approx(0.8, abs=1e-15)


def test_cf_extremes(cf):
    assert tensor(cf, -1.0, 1.0) == 0.0
    assert tensor(cf, 1.0, -1.0) == 0.0
    assert tensor(cf, 1.0, 0.3) == 1.0
    assert tensor(cf, -1.0, 0.3) == -1.0


def test_cf_boundary_breaks_associativity(cf):
    left = tensor(cf, tensor(cf, 1.0, -1.0), -1.0)
    right = tensor(cf, 1.0, tensor(cf, -1.0, -1.0))
    assert (left, right) == (-1.0, 0.0)


@pytest.mark.parametrize("cid", ["CF", "PT", "PTMAX", "PTB", "IP", "LR"])
def test_unit_law(cid):
    from epicalc import get_calculus
    from epicalc.sampling import sample_tuples

    c = get_calculus(cid)
    for (x,) in sample_tuples(c, "unit-test", 1, Tolerance(sample_count=200)):
        assert equal(c, tensor(c, x, c.unit), x)


def test_fuse_all_examples(cf, pt):
    assert fuse_all(pt, [0.9, 0.4, 0.7]) == 0.4
    assert fuse_all(cf, [0.5]) == 0.5
    # phi(0.5) = 3, phi(-0.8) = 1/9
    assert fuse_all(cf, [0.5, 0.5, -0.8]) == pytest.approx(phi_inv(3 * 3 / 9), abs=1e-12)
    assert fuse_all(cf, [0.5, 0.5, -0.8]) == pytest.approx(0.0, abs=1e-12)


def test_fuse_all_errors(cf):
    with pytest.raises(EmptyInput):
        fuse_all(cf, [])
    with pytest.raises(InvalidValue):
        fuse_all(cf, [0.1, 3.0])


@settings(max_examples=200)
@given(st.lists(interior, min_size=1, max_size=6), st.randoms())
def test_fuse_all_permutation_invariant(cf, xs, rnd):
    ys = list(xs)
    rnd.shuffle(ys)
    assert fuse_all(cf, xs) == pytest.approx(fuse_all(cf, ys), abs=1e-9)


@settings(max_examples=300)
@given(interior, interior)
def test_cf_phi_multiplicative(cf, x, y):
    assert phi(tensor(cf, x, y)) == pytest.approx(phi(x) * phi(y), rel=1e-9)
    assert tensor(cf, x, -x) == pytest.approx(0.0, abs=1e-9)


@settings(max_examples=300)
@given(interior, interior, interior)
def test_cf_monoid_laws_interior(cf, a, b, c_):
    assert tensor(cf, a, b) == tensor(cf, b, a)
    assert tensor(cf, tensor(cf, a, b), c_) == pytest.approx(tensor(cf, a, tensor(cf, b, c_)), abs=1e-9)


@settings(max_examples=300)
@given(st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1))
def test_cf_monotone_on_full_carrier(cf, a, b, da, db):
    a2, b2 = max(a, da), max(b, db)
    assert leq(cf, tensor(cf, a, b), tensor(cf, a2, b2))


# hom ----------------------------------------------------------------------------


def test_pt_godel(pt):
    assert hom(pt, 0.3, 0.7) == 1.0
    assert hom(pt, 0.7, 0.3) == 0.3


def test_cf_hom_against_brute_force(cf):
    z = np.linspace(-1.0, 1.0, 10**6 + 1)
    fused = (z + 0.5) / (1 + 0.5 * z)
    sup = z[fused <= 0.8 + 1e-12].max()
    assert sup == pytest.approx(0.5, abs=2e-6)
    assert hom(cf, 0.5, 0.8) == pytest.approx(sup, abs=2e-6)


def test_cf_hom_unit_case(cf):
    for y in (-0.7, 0.0, 0.4):
        assert hom(cf, 0.0, y) == pytest.approx(y)


def test_lr_hom(lr):
    assert hom(lr, 4.0, 2.0) == 0.5


def test_hom_unavailable(ptb):
    with pytest.raises(HomUnavailable):
        hom(ptb, Pair(0, 1), Pair(0, 1))


def test_hom_falls_back_to_sup_for_complete_scalar(ptmax):
    # max(z, 0.3) <= 0.7  iff  z <= 0.7
    assert hom(ptmax, 0.3, 0.7) == pytest.approx(0.7)


def test_hom_by_sup_examples(cf, pt):
    t = Tolerance()
    assert hom_by_sup(cf, 0.5, 0.8, t) == pytest.approx(0.5, abs=2 / t.grid_resolution)
    assert hom_by_sup(pt, 0.2, 0.9, t) == 1.0
    assert hom_by_sup(pt, 0.9, 0.2, t) == pytest.approx(0.2, abs=1e-12)


def test_hom_by_sup_empty_set_returns_bottom(ptmax):
    # max(z, 0.8) <= 0.2 has no solution
    assert hom_by_sup(ptmax, 0.8, 0.2, Tolerance(grid_resolution=64)) == 0.0


def test_hom_by_sup_needs_bounds(lr):
    with pytest.raises(PreconditionUnmet):
        hom_by_sup(lr, 2.0, 3.0)


@settings(max_examples=100, deadline=None)
@given(interior, interior)
def test_hom_vs_hom_by_sup_cf(cf, a, b):
    t = Tolerance(grid_resolution=512)
    assert hom_by_sup(cf, a, b, t) == pytest.approx(hom(cf, a, b), abs=2 / t.grid_resolution)


@settings(max_examples=300)
@given(interior, interior, interior)
def test_cf_adjunction(cf, z, a, b):
    assert adjunction_holds(cf, z, a, b)


@settings(max_examples=300)
@given(unit_iv, unit_iv, unit_iv)
def test_pt_adjunction(pt, z, a, b):
    assert adjunction_holds(pt, z, a, b)


def test_adjunction_flags_real_violation(cf):
    # the hom formula printed with the opposite sign fails the adjunction
    bad = (0.5 - 0.8) / (1 - 0.5 * 0.8)
    assert leq(cf, tensor(cf, 0.5, 0.5), 0.8) and not leq(cf, 0.5, bad)


def test_adjunction_ignores_eps_band(pt):
    # min(1, 1e-9) <= 0 only within eps, while the Godel hom compares exactly
    assert adjunction_holds(pt, 1.0, 1e-9, 0.0)


# join / meet --------------------------------------------------------------------


def test_join_meet_examples(cf, ip):
    assert join(cf, [-0.2, 0.6]) == 0.6
    assert join(ip, [Interval(0.1, 0.3), Interval(0.5, 0.6)]) == Interval(0.1, 0.6)
    assert meet(ip, [Interval(0.1, 0.5), Interval(0.3, 0.9)]) == Interval(0.3, 0.5)
    assert meet(ip, [Interval(0.0, 0.3), Interval(0.5, 0.9)]) is BOTTOM


def test_join_errors(cf, lr):
    with pytest.raises(NotComplete):
        join(lr, [1.0, 2.0])
    with pytest.raises(EmptyInput):
        join(cf, [])


@settings(max_examples=200)
@given(st.lists(st.tuples(unit_iv, unit_iv).map(sorted), min_size=1, max_size=5))
def test_ptb_join_is_least_upper_bound(ptb, raw):
    vs = [Pair(*p) for p in raw]
    j, m = join(ptb, vs), meet(ptb, vs)
    assert all(leq(ptb, v, j) and leq(ptb, m, v) for v in vs)
    # any other upper bound from the candidate grid sits above the join
    grid = [Pair(a, b) for a, b in itertools.combinations_with_replacement(np.linspace(0, 1, 11), 2)]
    for u in grid:
        if all(leq(ptb, v, u, 0.0) for v in vs):
            assert leq(ptb, j, u)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(eps=0)
    with pytest.raises(ValueError):
        Tolerance(seed=-1)
    assert math.isclose(Tolerance().eps, 1e-9)
