import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epicalc import BOTTOM, Interval, Pair, classify, compose, get_map, identity, tensor
from epicalc.core import leq
from epicalc.errors import MismatchedCalculi, UnknownMap
from epicalc.maps import BALANCED, CONSERVATIVE, NEITHER, pt_to_cf_power
from epicalc.sampling import sample_tuples

pairs = st.tuples(st.floats(0, 1), st.floats(0, 1)).map(lambda t: Pair(*sorted(t)))


def test_ptb_ip_roundtrip():
    f, g = get_map("ptb_to_ip"), get_map("ip_to_ptb")
    assert f(Pair(0.2, 0.7)) == Interval(0.2, 0.7)
    assert g(f(Pair(0.2, 0.7))) == Pair(0.2, 0.7)
    assert f(BOTTOM) is BOTTOM


@settings(max_examples=300)
@given(pairs, pairs)
def test_ptb_ip_strict(a, b):
    f = get_map("ptb_to_ip")
    assert f(tensor(f.source, a, b)) == tensor(f.target, f(a), f(b))


@pytest.mark.parametrize("name", ["ptb_to_ip", "ip_to_ptb", "identity:PT", "identity:CF", "ptb_to_ip>>ip_to_ptb"])
def test_balanced(name, quick):
    assert classify(get_map(name), quick).summary == BALANCED


def test_pt_to_cf_lax_counterexample_replays(quick):
    F = get_map("pt_to_cf")
    V, W = F.source, F.target
    # 0.9 (x) 0.9 = 0.9 in PT, but 0.8 (x) 0.8 ~ 0.9756 in CF exceeds F(0.9) = 0.8
    assert not leq(W, tensor(W, F(0.9), F(0.9)), F(tensor(V, 0.9, 0.9)))
    k = classify(F, quick)
    x, y = k.lax.counterexample
    assert not leq(W, tensor(W, F(x), F(y)), F(tensor(V, x, y)))


def test_pt_to_cf_is_neither(quick):
    k = classify(get_map("pt_to_cf"), quick)
    assert k.summary == NEITHER
    assert not k.oplax_unit.holds  # F(1) = 1 sits above the CF unit 0


def test_ptb_to_cf_not_monotone(quick):
    k = classify(get_map("ptb_to_cf"), quick)
    a, b = k.monotone.counterexample
    F = get_map("ptb_to_cf")
    assert leq(F.source, a, b) and not leq(F.target, F(a), F(b))


def test_shift_is_conservative(quick):
    assert classify(pt_to_cf_power(), quick).summary == CONSERVATIVE
    assert classify(pt_to_cf_power(2.0), quick).summary == CONSERVATIVE


def test_compose_and_errors(pt):
    h = compose(get_map("pt_to_cf_shift"), identity(get_map("pt_to_cf_shift").target))
    assert h.name == "pt_to_cf_shift>>identity:CF"
    assert h(0.25) == -0.75
    with pytest.raises(MismatchedCalculi):
        compose(get_map("pt_to_cf"), get_map("ptb_to_ip"))
    with pytest.raises(UnknownMap):
        get_map("nope")
    with pytest.raises(ValueError):
        pt_to_cf_power(0.0)


def test_composite_roundtrip_is_identity(quick):
    f, g = get_map("ptb_to_ip"), get_map("ip_to_ptb")
    fg = compose(f, g)
    for (x,) in sample_tuples(f.source, "roundtrip", 1, quick):
        assert fg(x) == x
