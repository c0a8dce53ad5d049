"""Verification harness: metric axioms, invariance, properness,
almost-normality, and the discrete-theorem equivalence, each returning a
Verdict with a machine-checkable certificate.

Verdict discipline: FAIL always carries a replayable counterexample; PASS
carries the exhaustively checked finite witness data; UNKNOWN carries a
budget/divergence trace and is never upgraded to a claim of infiniteness;
SAMPLED marks positive evidence obtained under a sampled (non-exhaustive)
generator schedule.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import cosets as _cosets
from .cosets import HeckePair, h_orbit_of_coset, identity_coset
from .elements import elem_inv, elem_mul, serialize
from .errors import BudgetExceeded, NotLocallyFinite
from .metrics import ball, build_relative_cayley

PASS = "PASS"
FAIL = "FAIL"
UNKNOWN = "UNKNOWN"
SAMPLED = "SAMPLED"


@dataclass
class Certificate:
    kind: str  # orbit_list | ball_enumeration | counterexample_triple |
    #            divergence_trace | homomorphism_table | invariance_pair
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "data": self.data}


@dataclass
class Verdict:
    check: str
    status: str
    certificate: Certificate
    context: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "certificate": self.certificate.to_dict(),
            "context": self.context,
        }


# ---------------------------------------------------------------------------
# metric axioms
# ---------------------------------------------------------------------------

def check_metric_axioms(
    distance_fn, points, sample_triples: int = 500, seed: int = 0
) -> Verdict:
    """Symmetry, triangle inequality and identity of indiscernibles on a
    point sample, exact arithmetic.

    On a discrete space compatibility reduces to d(x, y) = 0 <=> x = y, so
    the indiscernibility clause is the full compatibility check.
    """
    points = list(points)
    n = len(points)
    rng = random.Random(seed)
    if n**3 <= sample_triples:
        triples = [
            (a, b, c) for a in points for b in points for c in points
        ]
        exhaustive = True
    else:
        triples = [
            (rng.choice(points), rng.choice(points), rng.choice(points))
            for _ in range(sample_triples)
        ]
        exhaustive = False

    def keyof(p):
        return p.key() if hasattr(p, "key") else str(p)

    for a, b, c in triples:
        dab, dba = distance_fn(a, b), distance_fn(b, a)
        dbc, dac = distance_fn(b, c), distance_fn(a, c)
        if dab < 0:
            return Verdict(
                "metric_axioms",
                FAIL,
                Certificate(
                    "counterexample_triple",
                    {"violation": "negative", "a": keyof(a), "b": keyof(b), "d": str(dab)},
                ),
            )
        if dab != dba:
            return Verdict(
                "metric_axioms",
                FAIL,
                Certificate(
                    "counterexample_triple",
                    {
                        "violation": "symmetry",
                        "a": keyof(a),
                        "b": keyof(b),
                        "d_ab": str(dab),
                        "d_ba": str(dba),
                    },
                ),
            )
        if (dab == 0) != (a == b):
            return Verdict(
                "metric_axioms",
                FAIL,
                Certificate(
                    "counterexample_triple",
                    {"violation": "indiscernibility", "a": keyof(a), "b": keyof(b), "d": str(dab)},
                ),
            )
        if dac > dab + dbc:
            return Verdict(
                "metric_axioms",
                FAIL,
                Certificate(
                    "counterexample_triple",
                    {
                        "violation": "triangle",
                        "a": keyof(a),
                        "b": keyof(b),
                        "c": keyof(c),
                        "d_ac": str(dac),
                        "d_ab": str(dab),
                        "d_bc": str(dbc),
                    },
                ),
            )
    return Verdict(
        "metric_axioms",
        PASS,
        Certificate(
            "ball_enumeration",
            {"points": len(points), "triples": len(triples), "exhaustive": exhaustive},
        ),
    )


# ---------------------------------------------------------------------------
# invariance
# ---------------------------------------------------------------------------

def check_invariance(
    distance_fn, translate_fn, group_sample, point_pairs, keyof=str
) -> Verdict:
    """Exact d(g a, g b) = d(a, b) on all supplied samples."""
    checked = 0
    for g in group_sample:
        for a, b in point_pairs:
            d1 = distance_fn(a, b)
            d2 = distance_fn(translate_fn(g, a), translate_fn(g, b))
            checked += 1
            if d1 != d2:
                return Verdict(
                    "invariance",
                    FAIL,
                    Certificate(
                        "invariance_pair",
                        {
                            "g": serialize(g),
                            "a": keyof(a),
                            "b": keyof(b),
                            "d_before": str(d1),
                            "d_after": str(d2),
                        },
                    ),
                )
    return Verdict(
        "invariance", PASS, Certificate("ball_enumeration", {"samples": checked})
    )


# ---------------------------------------------------------------------------
# properness
# ---------------------------------------------------------------------------

def check_properness(graph, center, radii, budget: int = 20_000) -> Verdict:
    """Exact closed-ball cardinalities; PASS iff every requested radius
    enumerates finitely within budget."""
    radii = sorted(radii)
    table = {}
    for r in radii:
        try:
            b = ball(graph, center, r, budget)
        except BudgetExceeded as exc:
            table[str(r)] = None
            return Verdict(
                "properness",
                FAIL,
                Certificate(
                    "divergence_trace",
                    {"radius": r, "visited": exc.visited, "table": table},
                ),
                context={"budget": budget},
            )
        table[str(r)] = len(b)
    return Verdict(
        "properness",
        PASS,
        Certificate("ball_enumeration", {"table": table}),
        context={"budget": budget},
    )


def check_discrete_metric_properness(point_iter, budget: int = 10_000) -> Verdict:
    """Properness of the usual discrete metric delta on a point set.

    Under delta, B(x, 1) is the whole space: proper only for finite spaces.
    FAIL is returned as soon as the radius-1 ball exceeds budget points.
    """
    count = 0
    for _ in point_iter:
        count += 1
        if count > budget:
            return Verdict(
                "discrete_metric_properness",
                FAIL,
                Certificate(
                    "divergence_trace",
                    {"radius": 1, "ball_size_at_least": count},
                ),
                context={"budget": budget},
            )
    return Verdict(
        "discrete_metric_properness",
        PASS,
        Certificate("ball_enumeration", {"space_size": count}),
    )


# ---------------------------------------------------------------------------
# almost-normality
# ---------------------------------------------------------------------------

def check_almost_normal(pair: HeckePair, test_set, budget: int = 10_000) -> Verdict:
    """H almost normal on the test set K: every k in K has a finite H-orbit
    of kH.  PASS carries K' (the union of orbit representatives); UNKNOWN
    carries divergence traces and never claims infiniteness.  Sampled
    subgroup schedules downgrade PASS to SAMPLED."""
    orbits = {}
    traces = {}
    sampled = False
    for k in test_set:
        orbit = h_orbit_of_coset(pair, k, budget)
        sampled = sampled or orbit.sampled
        if orbit.finite:
            orbits[serialize(k)] = orbit
        else:
            traces[serialize(k)] = orbit
    if traces:
        return Verdict(
            "almost_normal",
            UNKNOWN,
            Certificate(
                "divergence_trace",
                {
                    "diverging": {k: o.to_dict() for k, o in traces.items()},
                    "finite": {k: o.to_dict() for k, o in orbits.items()},
                },
            ),
            context={"budget": budget, "sampled": sampled},
        )
    kprime = sorted({c.key() for o in orbits.values() for c in o.cosets})
    return Verdict(
        "almost_normal",
        SAMPLED if sampled else PASS,
        Certificate(
            "orbit_list",
            {
                "orbits": {k: o.to_dict() for k, o in orbits.items()},
                "k_prime_cosets": kprime,
            },
        ),
        context={"budget": budget, "sampled": sampled},
    )


# ---------------------------------------------------------------------------
# equivalence harness for the discrete theorem
# ---------------------------------------------------------------------------

def equivalence_harness(
    pair: HeckePair,
    gens,
    budget: int = 10_000,
    radius: int = 3,
    samples: int = 100,
    seed: int = 0,
) -> Verdict:
    """Cross-check the three equivalent conditions on one pair.

    Verdict A: almost-normality of H on the generating set (orbit
    certificates).  Verdict B: the relative Cayley construction succeeds
    and yields a locally finite compatible invariant metric.  PASS iff the
    two verdicts agree (both-yes or both-no/unknown); on success the base
    point's stabilizer under the graph action is re-checked to be exactly H
    on sampled group elements.
    """
    sym = list(gens) + [elem_inv(g) for g in gens]
    a_verdict = check_almost_normal(pair, sym, budget)
    a_yes = a_verdict.status in (PASS, SAMPLED)
    try:
        graph = build_relative_cayley(pair, gens, budget)
        b_yes = True
        b_info = {"built": True, "degree": len(graph.neighbors(graph.base))}
    except NotLocallyFinite as exc:
        graph = None
        b_yes = False
        b_info = {
            "built": False,
            "offender": exc.offender,
            "trace": exc.trace.to_dict() if exc.trace is not None else None,
        }

    agree = a_yes == b_yes
    detail = {
        "almost_normal_status": a_verdict.status,
        "construction": b_info,
    }
    if not agree:
        return Verdict(
            "equivalence_harness",
            FAIL,
            Certificate("counterexample_triple", detail),
            context={"budget": budget},
        )

    if graph is not None:
        # stabilizer cross-check: g fixes eH in the graph action iff g in H
        rng = random.Random(seed)
        base = identity_coset(pair)
        words = [pair.ctx.identity()]
        for _ in range(max(samples, 1)):
            g = pair.ctx.identity()
            for _ in range(rng.randint(1, radius)):
                g = elem_mul(g, rng.choice(sym))
            words.append(g)
        for g in words:
            fixes = graph.translate(g, base) == base
            member = _cosets.contains(pair, g)
            if fixes != member:
                return Verdict(
                    "equivalence_harness",
                    FAIL,
                    Certificate(
                        "counterexample_triple",
                        {
                            "violation": "stabilizer",
                            "g": serialize(g),
                            "fixes_base": fixes,
                            "in_subgroup": member,
                        },
                    ),
                    context={"budget": budget},
                )
        detail["stabilizer_samples"] = len(words)
        # compatibility: d = 0 <=> equal canonical points, within a ball
        b1 = ball(graph, base, min(radius, 2), budget)
        for c in b1.members:
            d = graph.distance(base, c, 2 * radius + 2)
            if d.exact and (d.value == 0) != (c == base):
                return Verdict(
                    "equivalence_harness",
                    FAIL,
                    Certificate(
                        "counterexample_triple",
                        {"violation": "compatibility", "point": c.key(), "d": d.value},
                    ),
                    context={"budget": budget},
                )
        detail["compatibility_points"] = len(b1.members)

    status = SAMPLED if (agree and a_verdict.context.get("sampled") and a_yes) else PASS
    return Verdict(
        "equivalence_harness",
        status,
        Certificate("orbit_list", detail),
        context={"budget": budget},
    )


# ---------------------------------------------------------------------------
# certificate replay
# ---------------------------------------------------------------------------

def replay_counterexample(distance_fn, certificate: Certificate, resolve) -> bool:
    """Re-run a FAIL counterexample against the named metric.

    `resolve` maps serialized point keys back to points.  Returns True when
    the violation reproduces."""
    data = certificate.data
    violation = data.get("violation")
    if violation == "symmetry":
        a, b = resolve(data["a"]), resolve(data["b"])
        return distance_fn(a, b) != distance_fn(b, a)
    if violation == "indiscernibility":
        a, b = resolve(data["a"]), resolve(data["b"])
        return (distance_fn(a, b) == 0) != (a == b)
    if violation == "triangle":
        a, b, c = resolve(data["a"]), resolve(data["b"]), resolve(data["c"])
        return distance_fn(a, c) > distance_fn(a, b) + distance_fn(b, c)
    if violation == "negative":
        a, b = resolve(data["a"]), resolve(data["b"])
        return distance_fn(a, b) < 0
    raise ValueError(f"not a replayable counterexample: {violation!r}")


def recheck_orbit_closure(pair: HeckePair, orbit_cosets) -> bool:
    """Exact re-check that an orbit certificate is closed under the
    subgroup generators and pairwise distinct."""
    gens, _ = _cosets.subgroup_generators(pair)
    members = set(orbit_cosets)
    if len(members) != len(list(orbit_cosets)):
        return False
    for c in members:
        for h in gens:
            if _cosets.left_mul(pair, h, c) not in members:
                return False
    return True
