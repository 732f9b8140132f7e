import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epicalc import (
    HypothesisGraph,
    bayes_graph,
    bayes_oracle,
    cf_evidence_oracle,
    from_priors,
    get_calculus,
    normalize,
    possibilistic_oracle,
    v_update,
)
from epicalc.errors import BoundaryValue, CalculusMismatch, NonPositiveInput, NotClosed, UnknownObject
from epicalc.updating import replay


def three(cid, ab, be, ae, fill):
    """Graph on H, H2, E with the three homs that feed the update of (H, H2)."""
    objs = ("H", "H2", "E")
    homs = {(a, b): fill for a in objs for b in objs}
    homs.update({("H", "H2"): ab, ("H2", "E"): be, ("H", "E"): ae})
    return HypothesisGraph(get_calculus(cid), objs, homs, "lax")


def test_bayes_example():
    g = bayes_graph({"A": 0.2, "B": 0.8}, {"A": 0.5, "B": 0.25})
    assert g.hom("A", "B") == 4.0
    r = v_update(g, "E")
    assert r.graph.hom("A", "B") == pytest.approx(0.5, rel=1e-12)


@pytest.mark.parametrize(
    "priors, likes, pair, odds",
    [
        ({"A": 0.2, "B": 0.8}, {"A": 0.5, "B": 0.25}, ("A", "B"), 0.5),
        ({"A": 0.3, "B": 0.3}, {"A": 0.4, "B": 0.4}, ("B", "A"), 1.0),
        ({"A": 0.5, "B": 0.5}, {"A": 1.0, "B": 0.5}, ("A", "B"), 2.0),
    ],
)
def test_bayes_oracle_examples(priors, likes, pair, odds):
    assert bayes_oracle(priors, likes)[pair] == pytest.approx(odds, rel=1e-12)


@pytest.mark.parametrize(
    "priors, likes",
    [({"A": 0.0}, {"A": 0.5}), ({"A": 0.5}, {"A": 1.5}), ({"A": 0.5}, {}), ({"A": math.inf}, {"A": 0.5})],
)
def test_bayes_oracle_rejects(priors, likes):
    with pytest.raises(NonPositiveInput):
        bayes_oracle(priors, likes)


@pytest.mark.parametrize("ab, be, ae, want", [(0.8, 0.6, 0.7, 1.0), (0.9, 0.8, 0.5, 0.5), (0.3, 0.3, 0.3, 1.0)])
def test_pt_update_examples(ab, be, ae, want):
    g = three("PT", ab, be, ae, 1.0)
    assert v_update(g, "E").graph.hom("H", "H2") == want
    assert possibilistic_oracle(g, "E")["H", "H2"] == want


@pytest.mark.parametrize("ab, be, ae, want", [(0.0, 0.0, 0.5, 0.5), (0.5, 0.5, 0.0, -0.8)])
def test_cf_examples(ab, be, ae, want):
    g = three("CF", ab, be, ae, 0.0)
    assert cf_evidence_oracle(g, "E")["H", "H2"] == pytest.approx(want, abs=1e-12)
    assert v_update(g, "E").graph.hom("H", "H2") == pytest.approx(want, abs=1e-12)


def test_cf_oracle_boundary():
    with pytest.raises(BoundaryValue):
        cf_evidence_oracle(three("CF", 1.0, 0.0, 0.0, 0.0), "E")


def test_oracle_calculus_checks():
    with pytest.raises(CalculusMismatch):
        possibilistic_oracle(three("CF", 0.1, 0.1, 0.1, 0.0), "E")
    with pytest.raises(CalculusMismatch):
        cf_evidence_oracle(three("PT", 0.1, 0.1, 0.1, 1.0), "E")


def test_update_errors():
    with pytest.raises(UnknownObject):
        v_update(from_priors({"A": 0.5}), "Z")
    ptmax = get_calculus("PTMAX")
    g = HypothesisGraph(ptmax, ("A",), {("A", "A"): 0.0}, "lax")
    with pytest.raises(NotClosed):
        v_update(g, "A")
    ptb = get_calculus("PTB")
    with pytest.raises(NotClosed):
        v_update(HypothesisGraph(ptb, ("A",), {("A", "A"): ptb.unit}, "lax"), "A")


def test_lr_self_evidence():
    r = v_update(bayes_graph({"A": 0.1, "B": 0.6, "C": 0.3}, {"A": 0.9, "B": 0.2, "C": 0.5}), "E")
    for h in ("A", "B", "C", "E"):
        assert r.graph.hom(h, "E") == pytest.approx(1.0, rel=1e-12)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_replay_is_bit_exact(seed):
    g = np.random.default_rng(seed)
    priors = {f"H{i}": float(g.uniform(0.01, 1)) for i in range(4)}
    likes = {h: float(g.uniform(0.01, 1)) for h in priors}
    r = v_update(bayes_graph(priors, likes), "E")
    assert replay(r) == r.graph.homs


def test_normalize():
    p = normalize(from_priors({"A": 0.2, "B": 0.8}), "A")
    assert p["A"] == 1.0 and p["B"] == pytest.approx(4.0, rel=1e-12)
    with pytest.raises(UnknownObject):
        normalize(from_priors({"A": 0.2}), "Q")


@settings(max_examples=50)
@given(st.dictionaries(st.sampled_from("ABCD"), st.floats(0.01, 1.0), min_size=2))
def test_normalize_ratio(priors):
    g = from_priors(priors)
    objs = list(priors)
    p = normalize(g, objs[0])
    for a in objs:
        for b in objs:
            assert p[b] / p[a] == pytest.approx(g.hom(a, b), rel=1e-9)
