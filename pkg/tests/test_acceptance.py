"""Acceptance suite: nine criteria, each with an independent brute-force
oracle where a golden value is involved.  Every test prints a single
pass line so the suite doubles as a checklist (`pytest -s tests/test_acceptance.py`).
"""

import math
import random
from fractions import Fraction

from cosetmetric.cli import (
    bundled_config_names,
    bundled_config_path,
    load_config,
    report_json,
    run_experiment,
    strip_timing,
)
from cosetmetric.closure import (
    closure_finite,
    stabilizer_orbit_probe,
    truncated_closure_levels,
)
from cosetmetric.cosets import (
    contains,
    enumerate_cosets,
    group_elements,
    h_orbit_of_coset,
    identity_coset,
    left_mul,
    normal_core,
    quotient_pair,
    subgroup_elements,
)
from cosetmetric.elements import Affine, elem_inv, elem_mul, parse_matrix
from cosetmetric.errors import NotLocallyFinite
from cosetmetric.gsets import (
    affine_rationals_gset,
    infinite_dihedral_on_z,
    odometer_gset,
    odometer_windows,
)
from cosetmetric.metrics import (
    HausdorffCosetMetric,
    WordMetric,
    ball,
    build_orbit_pairs_graph,
    build_relative_cayley,
)
from cosetmetric.verify import (
    PASS,
    UNKNOWN,
    check_almost_normal,
    check_invariance,
    check_metric_axioms,
    equivalence_harness,
)

from util_pairs import (
    affine_dilation_pair,
    affine_translation_pair,
    bs_pair,
    random_element,
    s4_d4_pair,
    sl2_pair,
    transposition_ctx,
)


def _report(num, text):
    print(f"ACCEPTANCE {num} PASS: {text}")


# ---------------------------------------------------------------------------
# 1. orbit counts vs brute-force oracles
# ---------------------------------------------------------------------------

def test_acceptance_1_orbit_counts():
    pair23 = bs_pair(2, 3)
    t = pair23.ctx.parse("t")
    assert len(h_orbit_of_coset(pair23, t).cosets) == 2
    assert len(h_orbit_of_coset(pair23, elem_inv(t)).cosets) == 3
    pair35 = bs_pair(3, 5)
    assert len(h_orbit_of_coset(pair35, pair35.ctx.parse("t")).cosets) == 3

    aff = affine_translation_pair()
    assert len(h_orbit_of_coset(aff, Affine(Fraction(3, 2), 0)).cosets) == 3

    # oracle for (p/q, 0): enumerate (1, k) translates, dedup by exact coset
    # membership (g1H = g2H iff g1^-1 g2 has a = 1 and integer b), count
    rng = random.Random("accept1")
    for _ in range(20):
        p = rng.randint(1, 30)
        q = rng.randint(1, 30)
        g = math.gcd(p, q)
        p, q = p // g, q // g
        elem = Affine(Fraction(p, q), 0)
        translates = [elem_mul(Affine(1, k), elem) for k in range(0, 10 * p + 1)]
        classes = []
        for x in translates:
            if not any(
                contains(aff, elem_mul(elem_inv(y), x)) for y in classes
            ):
                classes.append(x)
        oracle = len(classes)
        assert oracle == p
        assert len(h_orbit_of_coset(aff, elem).cosets) == oracle

    # SL2: oracle dedups H-translates of diag(2, 1/2) by membership test,
    # using words over elementary generators of SL2(Z), stabilized in length
    sl = sl2_pair()
    d = parse_matrix("mat[[2,0],[0,1/2]]")
    elementary = [
        parse_matrix(s)
        for s in (
            "mat[[1,1],[0,1]]",
            "mat[[1,-1],[0,1]]",
            "mat[[1,0],[1,1]]",
            "mat[[1,0],[-1,1]]",
        )
    ]
    counts = []
    for max_len in (4, 5):
        hs = {parse_matrix("mat[[1,0],[0,1]]")}
        frontier = list(hs)
        for _ in range(max_len):
            nxt = []
            for h in frontier:
                for e in elementary:
                    he = elem_mul(h, e)
                    if he not in hs:
                        hs.add(he)
                        nxt.append(he)
            frontier = nxt
        classes = []
        for h in hs:
            x = elem_mul(h, d)
            if not any(
                contains(sl, elem_mul(elem_inv(y), x)) for y in classes
            ):
                classes.append(x)
        counts.append(len(classes))
    assert counts[0] == counts[1] == 6  # oracle value is authoritative
    assert len(h_orbit_of_coset(sl, d).cosets) == counts[-1]
    _report(1, "orbit counts match brute-force oracles (BS 2/3/3, affine p, SL2 6)")


# ---------------------------------------------------------------------------
# 2. relative Cayley construction for BS(2,3)
# ---------------------------------------------------------------------------

def test_acceptance_2_relative_cayley_bs23():
    pair = bs_pair(2, 3)
    graph = build_relative_cayley(pair, pair.ctx.generators)

    # degree = sum of deduplicated generator-orbit sizes = Bass-Serre 5
    dedup = {c.key() for o in graph.edge_orbits.values() for c in o.cosets}
    dedup.discard(identity_coset(pair).key())
    assert len(dedup) == 5
    b3 = ball(graph, graph.base, 3)
    assert all(len(graph.neighbors(v)) == 5 for v in b3.members)

    # invariance on 200 samples, exact
    rng = random.Random("accept2")
    pts = ball(graph, graph.base, 2).members

    def dist(a, b):
        d = graph.distance(a, b, 30)
        assert d.exact
        return d.value

    group_sample = [random_element(rng, "bs") for _ in range(20)]
    point_pairs = [(rng.choice(pts), rng.choice(pts)) for _ in range(10)]
    v = check_invariance(
        dist, graph.translate, group_sample, point_pairs, keyof=lambda c: c.key()
    )
    assert v.status == PASS
    assert v.certificate.data["samples"] == 200

    assert check_metric_axioms(dist, pts, 400, seed=0).status == PASS

    # ball-size oracle: products of <= r certified edge elements, dedup by
    # exact coset membership (x^-1 y in <x>), independent of the graph BFS
    edge = list(graph.edge_elements)

    def same_coset(x, y):
        return contains(pair, elem_mul(elem_inv(x), y))

    layer = [pair.ctx.identity()]
    reached = [pair.ctx.identity()]
    oracle_sizes = [1]
    for _ in range(4):
        nxt = []
        for x in layer:
            for u in edge:
                y = elem_mul(x, u)
                if not any(same_coset(y, z) for z in reached + nxt):
                    nxt.append(y)
        reached.extend(nxt)
        layer = nxt
        oracle_sizes.append(len(reached))
    b4 = ball(graph, graph.base, 4)
    graph_sizes = [
        sum(b4.layer_sizes[: k + 1]) for k in range(len(b4.layer_sizes))
    ]
    assert graph_sizes == oracle_sizes == [1, 6, 26, 106, 426]
    _report(2, "BS(2,3) graph 5-regular, invariant, metric, balls 1/6/26/106/426")


# ---------------------------------------------------------------------------
# 3. negative example fidelity
# ---------------------------------------------------------------------------

def test_acceptance_3_negative_example():
    pair = affine_dilation_pair()
    v = check_almost_normal(pair, list(pair.ctx.generators), budget=10_000)
    assert v.status == UNKNOWN
    diverging = v.certificate.data["diverging"]
    assert diverging
    for trace in diverging.values():
        # the last recorded frontier is partial (cut off by the budget);
        # every complete layer grows monotonically
        sizes = trace["frontier_sizes"][:-1]
        assert len(sizes) >= 3
        assert all(b >= a for a, b in zip(sizes, sizes[1:]))  # monotone growth
        assert sizes[-1] > sizes[0]
    try:
        build_relative_cayley(pair, pair.ctx.generators, budget=10_000)
        raise AssertionError("construction must refuse")
    except NotLocallyFinite as exc:
        assert exc.offender.startswith("aff(")
    _report(3, "dilation pair: UNKNOWN with growing frontier, refusal names offender")


# ---------------------------------------------------------------------------
# 4. Hausdorff metric vs exhaustive sup-inf formula
# ---------------------------------------------------------------------------

def _word_lengths(ctx):
    dist = {ctx.identity(): 0}
    frontier = [ctx.identity()]
    r = 0
    while frontier:
        nxt = []
        for e in frontier:
            for s in ctx.generators:
                p = elem_mul(e, s)
                if p not in dist:
                    dist[p] = r + 1
                    nxt.append(p)
        frontier = nxt
        r += 1
    return dist


def _check_hausdorff_pair(pair):
    wm = WordMetric(pair.ctx)
    metric = HausdorffCosetMetric(pair, wm)
    lengths = _word_lengths(pair.ctx)
    cosets = enumerate_cosets(pair, 12)
    h = subgroup_elements(pair)
    for a in cosets:
        for b in cosets:
            left = [elem_mul(a.rep, x) for x in h]
            right = [elem_mul(b.rep, x) for x in h]

            def d(u, v):
                return lengths[elem_mul(elem_inv(u), v)]

            oracle = max(
                max(min(d(u, v) for v in right) for u in left),
                max(min(d(u, v) for u in left) for v in right),
            )
            assert metric.distance(a, b) == oracle
            assert (metric.distance(a, b) == 0) == (a == b)
    for g in group_elements(pair.ctx):
        for a in cosets:
            for b in cosets:
                assert metric.distance(a, b) == metric.distance(
                    left_mul(pair, g, a), left_mul(pair, g, b)
                )


def test_acceptance_4_hausdorff_metric():
    from cosetmetric.cosets import HeckePair, PermSubgroup
    from cosetmetric.elements import Perm

    s3 = HeckePair(transposition_ctx(3), PermSubgroup((Perm((1, 0, 2)),)))
    _check_hausdorff_pair(s3)
    d4 = (Perm((1, 2, 3, 0)), Perm((3, 2, 1, 0)))
    s4 = HeckePair(transposition_ctx(4), PermSubgroup(d4))
    _check_hausdorff_pair(s4)
    _report(4, "Hausdorff metric equals exhaustive sup-inf, invariant, compatible")


# ---------------------------------------------------------------------------
# 5. normal core and quotient reduction
# ---------------------------------------------------------------------------

def test_acceptance_5_normal_core():
    pair = s4_d4_pair()
    core = normal_core(pair)
    g_all = group_elements(pair.ctx)
    h_set = set(subgroup_elements(pair))
    oracle = set(h_set)
    for g in g_all:
        oracle &= {elem_mul(elem_mul(g, h), elem_inv(g)) for h in h_set}
    assert set(core) == oracle and len(core) == 4
    assert all(elem_mul(h, h) in oracle for h in core)  # Klein four-group

    red = quotient_pair(pair, core)
    assert len(normal_core(red.pair)) == 1  # effective action
    assert len(enumerate_cosets(pair, 10)) == len(enumerate_cosets(red.pair, 10)) == 3
    _report(5, "core(D4 in S4) = V4 by conjugate intersection; quotient keeps 3 cosets")


# ---------------------------------------------------------------------------
# 6. closure groups
# ---------------------------------------------------------------------------

def test_acceptance_6_closure_groups():
    from cosetmetric.closure import FiniteAction

    points = tuple((a, b) for a in range(2) for b in range(3))
    index = {p: i for i, p in enumerate(points)}
    step = tuple(index[((a + 1) % 2, (b + 1) % 3)] for a, b in points)
    summary = closure_finite(FiniteAction(points=points, gen_maps={"s": step}))
    assert summary.order == 6

    gset = odometer_gset(10)
    levels = truncated_closure_levels(gset, odometer_windows(10))
    assert [lv.size for lv in levels] == [2**k for k in range(1, 11)]
    assert all(lv.status == "closed" for lv in levels)
    assert all(lv.compatible_with_previous for lv in levels[1:])  # surjective maps

    probe = stabilizer_orbit_probe(
        affine_rationals_gset((2, 3)), Fraction(0), [Fraction(1)], budget=2000
    )
    assert probe.verdict == "UNKNOWN"
    _report(6, "closures: |G'|=6 on Z/2xZ/3, odometer levels 2^k, Q-probe UNKNOWN")


# ---------------------------------------------------------------------------
# 7. infinite dihedral on Z
# ---------------------------------------------------------------------------

def test_acceptance_7_infinite_dihedral():
    gset = infinite_dihedral_on_z()
    graph = build_orbit_pairs_graph(gset, [(0, 1)], budget=1200)
    for x in range(-50, 51):
        for y in range(-50, 51):
            d = graph.distance(x, y, 150)
            assert d.exact and d.value == abs(x - y)
    rng = random.Random("accept7")
    words = []
    gen_words = gset.generator_words()
    for _ in range(100):
        w = ()
        for _ in range(rng.randint(1, 4)):
            w = rng.choice(gen_words) + w
        words.append(w)
    for w in words:
        x, y = rng.randint(-40, 40), rng.randint(-40, 40)
        gx, gy = gset.act(w, x), gset.act(w, y)
        d1 = graph.distance(x, y, 150)
        d2 = graph.distance(gx, gy, 150)
        assert d1.exact and d2.exact and d1.value == d2.value
    _report(7, "infinite dihedral: d(x,y)=|x-y| on [-50,50]^2, invariant on 100 samples")


# ---------------------------------------------------------------------------
# 8. equivalence harness across the corpus
# ---------------------------------------------------------------------------

def test_acceptance_8_equivalence_corpus():
    from cosetmetric.cli import build_pair

    checked = []
    for name in bundled_config_names():
        cfg = load_config(bundled_config_path(name))
        if "pair" not in cfg:
            continue
        pair = build_pair(cfg["pair"])
        budget = cfg.get("budgets", {}).get("orbit", 10_000)
        v = equivalence_harness(pair, pair.ctx.generators, budget=budget)
        assert v.status != "FAIL", f"{name}: almost-normality and construction disagree"
        checked.append(name)
    assert len(checked) >= 7
    _report(8, f"equivalence verdicts agree on all {len(checked)} bundled pairs")


# ---------------------------------------------------------------------------
# 9. determinism
# ---------------------------------------------------------------------------

def test_acceptance_9_determinism():
    for name in bundled_config_names():
        cfg = load_config(bundled_config_path(name))
        r1 = report_json(strip_timing(run_experiment(cfg, seed=123)))
        r2 = report_json(strip_timing(run_experiment(cfg, seed=123)))
        assert r1 == r2, f"{name}: report not byte-identical"
    _report(9, "full corpus reports byte-identical modulo timing at fixed seed")
