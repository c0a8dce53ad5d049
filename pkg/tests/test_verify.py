"""Verifier self-tests: deliberately broken inputs must FAIL with
replayable counterexamples, honest inputs must PASS, and budget-starved
runs must stay at UNKNOWN."""

import itertools

import pytest

from cosetmetric.cosets import enumerate_cosets, left_mul
from cosetmetric.elements import elem_inv
from cosetmetric.metrics import (
    HausdorffCosetMetric,
    WordMetric,
    build_relative_cayley,
)
from cosetmetric.verify import (
    FAIL,
    PASS,
    SAMPLED,
    UNKNOWN,
    check_almost_normal,
    check_discrete_metric_properness,
    check_invariance,
    check_metric_axioms,
    check_properness,
    equivalence_harness,
    replay_counterexample,
)

from util_pairs import (
    affine_dilation_pair,
    affine_translation_pair,
    bs_pair,
    s3_pair,
    s4_d4_pair,
    sl2_pair,
)


def _s3_setup():
    pair = s3_pair()
    metric = HausdorffCosetMetric(pair, WordMetric(pair.ctx))
    cosets = enumerate_cosets(pair, 6)
    return pair, metric, cosets


def test_metric_axioms_pass_exhaustive():
    _, metric, cosets = _s3_setup()
    v = check_metric_axioms(metric.distance, cosets, sample_triples=1000)
    assert v.status == PASS
    assert v.certificate.data["exhaustive"]


def test_corrupted_symmetry_fails_and_replays():
    _, metric, cosets = _s3_setup()
    bad_key = cosets[1].key()

    def corrupt(a, b):
        d = metric.distance(a, b)
        if a.key() == bad_key and b.key() != bad_key:
            return d + 1
        return d

    v = check_metric_axioms(corrupt, cosets, sample_triples=1000)
    assert v.status == FAIL
    assert v.certificate.kind == "counterexample_triple"
    by_key = {c.key(): c for c in cosets}
    assert replay_counterexample(corrupt, v.certificate, by_key.__getitem__)
    # the honest metric does not reproduce the violation
    assert not replay_counterexample(metric.distance, v.certificate, by_key.__getitem__)


def test_corrupted_indiscernibility_fails():
    _, metric, cosets = _s3_setup()

    def corrupt(a, b):
        return 0 if {a.key(), b.key()} == {cosets[0].key(), cosets[1].key()} else metric.distance(a, b)

    v = check_metric_axioms(corrupt, cosets, sample_triples=1000)
    assert v.status == FAIL
    assert v.certificate.data["violation"] == "indiscernibility"


def test_representative_dependent_function_fails_invariance():
    pair, metric, cosets = _s3_setup()

    # depends on an arbitrary enumeration of cosets, not on the G-orbit of
    # the pair: left translation permutes the indices and breaks |i - j|
    index = {c.key(): i for i, c in enumerate(sorted(cosets, key=lambda c: c.key()))}

    def fake(a, b):
        return abs(index[a.key()] - index[b.key()])

    group = list(pair.ctx.generators)
    pairs = [(a, b) for a in cosets for b in cosets if a != b]
    v = check_invariance(
        fake,
        lambda g, c: left_mul(pair, g, c),
        group,
        pairs,
        keyof=lambda c: c.key(),
    )
    assert v.status == FAIL
    assert v.certificate.kind == "invariance_pair"


def test_true_metric_passes_invariance():
    pair, metric, cosets = _s3_setup()
    from cosetmetric.cosets import group_elements

    pairs = [(a, b) for a in cosets for b in cosets]
    v = check_invariance(
        metric.distance,
        lambda g, c: left_mul(pair, g, c),
        group_elements(pair.ctx),
        pairs,
        keyof=lambda c: c.key(),
    )
    assert v.status == PASS


def test_properness_pass_and_budget_fail():
    pair = bs_pair(2, 3)
    graph = build_relative_cayley(pair, pair.ctx.generators)
    v = check_properness(graph, graph.base, [0, 1, 2, 3])
    assert v.status == PASS
    assert v.certificate.data["table"] == {"0": 1, "1": 6, "2": 26, "3": 106}
    starved = check_properness(graph, graph.base, [0, 1, 2, 3], budget=10)
    assert starved.status == FAIL
    assert starved.certificate.kind == "divergence_trace"


def test_discrete_metric_properness():
    assert check_discrete_metric_properness(range(100)).status == PASS
    v = check_discrete_metric_properness(itertools.count(), budget=500)
    assert v.status == FAIL
    assert v.certificate.data["ball_size_at_least"] == 501


def test_almost_normal_pass_and_unknown():
    pair = bs_pair(2, 3)
    t = pair.ctx.parse("t")
    v = check_almost_normal(pair, [t, elem_inv(t)])
    assert v.status == PASS
    assert len(v.certificate.data["k_prime_cosets"]) == 5

    neg = affine_dilation_pair()
    v = check_almost_normal(neg, list(neg.ctx.generators), budget=1200)
    assert v.status == UNKNOWN  # never FAIL, never a claim of infiniteness
    assert v.context["sampled"]
    assert v.certificate.data["diverging"]


def test_almost_normal_sampled_downgrade():
    # a dilation pair where the tested orbit does close must still be
    # reported as SAMPLED because the subgroup schedule is a sample
    neg = affine_dilation_pair()
    dil = neg.ctx.parse("aff(2,0)")
    v = check_almost_normal(neg, [dil], budget=1200)
    assert v.status == SAMPLED


@pytest.mark.parametrize(
    "make_pair",
    [bs_pair, affine_translation_pair, sl2_pair, s3_pair, s4_d4_pair],
    ids=["bs23", "affine_translations", "sl2", "s3", "s4_d4"],
)
def test_equivalence_harness_positive(make_pair):
    pair = make_pair()
    v = equivalence_harness(pair, pair.ctx.generators)
    assert v.status == PASS
    assert v.certificate.data["construction"]["built"]


def test_equivalence_harness_negative_agrees():
    pair = affine_dilation_pair()
    v = equivalence_harness(pair, pair.ctx.generators, budget=1200)
    # both conditions fail together: the theorem's equivalence holds
    assert v.status == PASS
    assert not v.certificate.data["construction"]["built"]
    assert v.certificate.data["almost_normal_status"] == UNKNOWN
