"""Declarative experiment runner.

A config (TOML) names a Hecke pair, a G-set, or a finite action, plus
budgets and the checks to run; `run` executes the pipeline and writes a
deterministic JSON report, `export-dot` renders a ball of the constructed
coset graph, `list-examples` shows the bundled configs (the example corpus
doubles as the regression suite).

Exit codes: 0 no FAIL verdict, 1 some FAIL, 2 config parse error, 3 budget
exhausted before any check completed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path

import tomli

from . import __version__
from . import closure as _closure
from . import cosets as _cosets
from . import gsets as _gsets
from . import metrics as _metrics
from . import verify as _verify
from .cosets import (
    CyclicX,
    HeckePair,
    IntegerMatrices,
    IntegerTranslations,
    PermSubgroup,
    PositiveDilations,
    coset,
    enumerate_cosets,
    identity_coset,
)
from .elements import (
    affine_ctx,
    bs_ctx,
    elem_is_identity,
    elem_mul,
    perm_ctx,
    parse_perm,
    serialize,
    sl_ctx,
)
from .errors import (
    BudgetExceeded,
    ConfigError,
    CosetMetricError,
    NotLocallyFinite,
)

DEFAULT_BUDGETS = {"orbit": 10_000, "ball": 20_000, "word_metric": 20_000}

PAIR_CHECKS = (
    "almost_normal",
    "metric_axioms",
    "invariance",
    "properness",
    "equivalence",
    "normal_core",
    "hausdorff",
)
GSET_CHECKS = ("orbit_pairs", "stabilizer_probe", "closure_levels")
FINITE_CHECKS = ("closure_finite",)


# ---------------------------------------------------------------------------
# config parsing (strict: unknown keys rejected)
# ---------------------------------------------------------------------------

_TOP_KEYS = {
    "name",
    "seed",
    "expected_negative",
    "pair",
    "gset",
    "finite_action",
    "budgets",
    "checks",
}
_PAIR_KEYS = {"family", "m", "n", "degree", "subgroup", "generators",
              "subgroup_generators", "dilation_sample_bound"}
_GSET_KEYS = {"name", "max_level", "primes", "seeds", "probe_x", "probe_ys",
              "max_word_len", "windows_up_to", "degree_budget"}
_FINITE_KEYS = {"moduli"}
_BUDGET_KEYS = set(DEFAULT_BUDGETS)
_CHECK_KEYS = {"run", "radii", "samples", "almost_normal_set"}


def _reject_unknown(section: dict, allowed: set, where: str):
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {sorted(unknown)}")


def load_config(path) -> dict:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        cfg = tomli.loads(raw.decode("utf-8"))
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"config parse error in {path}: {exc}") from exc
    _reject_unknown(cfg, _TOP_KEYS, "config")
    if "name" not in cfg:
        raise ConfigError("config must have a 'name'")
    subjects = [k for k in ("pair", "gset", "finite_action") if k in cfg]
    if len(subjects) != 1:
        raise ConfigError("config must have exactly one of [pair], [gset], [finite_action]")
    if "pair" in cfg:
        _reject_unknown(cfg["pair"], _PAIR_KEYS, "[pair]")
    if "gset" in cfg:
        _reject_unknown(cfg["gset"], _GSET_KEYS, "[gset]")
    if "finite_action" in cfg:
        _reject_unknown(cfg["finite_action"], _FINITE_KEYS, "[finite_action]")
    _reject_unknown(cfg.get("budgets", {}), _BUDGET_KEYS, "[budgets]")
    _reject_unknown(cfg.get("checks", {}), _CHECK_KEYS, "[checks]")
    if "run" not in cfg.get("checks", {}):
        raise ConfigError("[checks] must list the checks to run")
    return cfg


def build_pair(spec: dict) -> HeckePair:
    family = spec.get("family")
    sub_name = spec.get("subgroup")
    if family == "bs":
        m, n = int(spec["m"]), int(spec["n"])
        if "generators" in spec:
            base = bs_ctx(m, n)
            ctx = bs_ctx(m, n, [base.parse(s) for s in spec["generators"]])
        else:
            ctx = bs_ctx(m, n)
        if sub_name != "cyclic_x":
            raise ConfigError(f"unsupported subgroup {sub_name!r} for family bs")
        return HeckePair(ctx, CyclicX())
    if family == "affine":
        base = affine_ctx([])
        gens = [base.parse(s) for s in spec["generators"]]
        ctx = affine_ctx(gens)
        if sub_name == "integer_translations":
            return HeckePair(ctx, IntegerTranslations())
        if sub_name == "positive_dilations":
            bound = int(spec.get("dilation_sample_bound", 5))
            return HeckePair(ctx, PositiveDilations(sample_bound=bound))
        raise ConfigError(f"unsupported subgroup {sub_name!r} for family affine")
    if family == "sl":
        degree = int(spec["degree"])
        base = sl_ctx(degree, [])
        gens = [base.parse(s) for s in spec["generators"]]
        ctx = sl_ctx(degree, gens)
        if sub_name != "integer_matrices":
            raise ConfigError(f"unsupported subgroup {sub_name!r} for family sl")
        return HeckePair(ctx, IntegerMatrices())
    if family == "perm":
        degree = int(spec["degree"])
        gens = [parse_perm(s) for s in spec["generators"]]
        ctx = perm_ctx(degree, gens)
        if sub_name != "perm_subgroup":
            raise ConfigError(f"unsupported subgroup {sub_name!r} for family perm")
        h_gens = tuple(parse_perm(s) for s in spec["subgroup_generators"])
        return HeckePair(ctx, PermSubgroup(h_gens))
    raise ConfigError(f"unknown family {family!r}")


def build_gset(spec: dict) -> _gsets.EncodedGSet:
    name = spec.get("name")
    if name == "infinite_dihedral":
        return _gsets.infinite_dihedral_on_z()
    if name == "rationals_mult":
        primes = tuple(int(p) for p in spec.get("primes", [2, 3, 5]))
        return _gsets.rationals_mult_gset(primes)
    if name == "affine_rationals":
        primes = tuple(int(p) for p in spec.get("primes", [2, 3]))
        return _gsets.affine_rationals_gset(primes)
    if name == "odometer":
        return _gsets.odometer_gset(int(spec.get("max_level", 10)))
    raise ConfigError(f"unknown gset {name!r}")


def _parse_point(gset_name: str, value):
    if gset_name == "infinite_dihedral":
        return int(value)
    if gset_name in ("rationals_mult", "affine_rationals"):
        return Fraction(str(value))
    if gset_name == "odometer":
        k, r = value
        return (int(k), int(r))
    raise ConfigError(f"cannot parse points for gset {gset_name!r}")


# ---------------------------------------------------------------------------
# check execution
# ---------------------------------------------------------------------------

class _GraphHolder:
    """Build the relative Cayley graph once per run; remember a refusal."""

    def __init__(self, pair, budget):
        self.pair = pair
        self.budget = budget
        self._graph = None
        self._refusal = None
        self._built = False

    def get(self):
        if not self._built:
            self._built = True
            try:
                self._graph = _metrics.build_relative_cayley(
                    self.pair, self.pair.ctx.generators, self.budget
                )
            except NotLocallyFinite as exc:
                self._refusal = exc
        return self._graph, self._refusal


def _refusal_verdict(check: str, refusal: NotLocallyFinite, budget: int):
    return _verify.Verdict(
        check,
        _verify.UNKNOWN,
        _verify.Certificate(
            "divergence_trace",
            {
                "refused": "NotLocallyFinite",
                "offender": refusal.offender,
                "trace": refusal.trace.to_dict() if refusal.trace else None,
            },
        ),
        context={"budget": budget},
    )


def _sample_group_elements(pair, rng, count, max_len=3):
    gens = pair.ctx.generators
    out = []
    for _ in range(count):
        g = pair.ctx.identity()
        for _ in range(rng.randint(1, max_len)):
            g = elem_mul(g, rng.choice(gens))
        out.append(g)
    return out


def run_pair_checks(cfg: dict, seed: int, cache) -> list:
    pair = build_pair(cfg["pair"])
    budgets = {**DEFAULT_BUDGETS, **cfg.get("budgets", {})}
    checks = cfg["checks"]
    radii = [int(r) for r in checks.get("radii", [0, 1, 2, 3])]
    samples = int(checks.get("samples", 200))
    holder = _GraphHolder(pair, budgets["orbit"])
    verdicts = []

    for check in checks["run"]:
        if check not in PAIR_CHECKS:
            raise ConfigError(f"unknown pair check {check!r}")
        rng = random.Random(f"{seed}:{check}")

        if check == "almost_normal":
            if "almost_normal_set" in checks:
                k_set = [pair.ctx.parse(s) for s in checks["almost_normal_set"]]
            else:
                k_set = list(pair.ctx.generators)
            verdicts.append(
                _verify.check_almost_normal(pair, k_set, budgets["orbit"])
            )
            continue

        if check == "equivalence":
            verdicts.append(
                _verify.equivalence_harness(
                    pair,
                    pair.ctx.generators,
                    budgets["orbit"],
                    samples=min(samples, 100),
                    seed=seed,
                )
            )
            continue

        if check == "normal_core":
            verdicts.append(_normal_core_verdict(pair))
            continue

        if check == "hausdorff":
            verdicts.append(_hausdorff_verdict(pair, budgets["word_metric"]))
            continue

        # graph-backed checks
        graph, refusal = holder.get()
        if graph is None:
            verdicts.append(_refusal_verdict(check, refusal, budgets["orbit"]))
            continue

        if check == "metric_axioms":
            sample_ball = _metrics.ball(graph, graph.base, min(2, max(radii)), budgets["ball"])
            max_r = 4 * max(2, max(radii)) + 4

            def dist(a, b):
                d = graph.distance(a, b, max_r)
                if not d.exact:
                    raise BudgetExceeded(f"distance unknown within {max_r}")
                return d.value

            v = _verify.check_metric_axioms(dist, sample_ball.members, samples, seed)
            verdicts.append(v)
        elif check == "invariance":
            sample_ball = _metrics.ball(graph, graph.base, min(2, max(radii)), budgets["ball"])
            max_r = 4 * max(2, max(radii)) + 10

            def dist(a, b):
                d = graph.distance(a, b, max_r)
                if not d.exact:
                    raise BudgetExceeded(f"distance unknown within {max_r}")
                return d.value

            group_sample = _sample_group_elements(pair, rng, max(1, samples // 10))
            pts = sample_ball.members
            point_pairs = [
                (rng.choice(pts), rng.choice(pts)) for _ in range(10)
            ]
            v = _verify.check_invariance(
                dist, graph.translate, group_sample, point_pairs,
                keyof=lambda c: c.key(),
            )
            verdicts.append(v)
        elif check == "properness":
            key = f"properness:r{max(radii)}"
            cached = cache.get(key) if cache is not None else None
            if cached is not None:
                verdicts.append(
                    _verify.Verdict(
                        "properness",
                        cached["status"],
                        _verify.Certificate("ball_enumeration", cached["data"]),
                        context={"budget": budgets["ball"], "cached": True},
                    )
                )
            else:
                v = _verify.check_properness(graph, graph.base, radii, budgets["ball"])
                if cache is not None and v.status == _verify.PASS:
                    cache.put(key, {"status": v.status, "data": v.certificate.data})
                verdicts.append(v)
    return verdicts


def _normal_core_verdict(pair) -> _verify.Verdict:
    core = _cosets.normal_core(pair)
    before = len(enumerate_cosets(pair, 2 * pair.ctx.n))
    reduction = _cosets.quotient_pair(pair, core)
    after = len(enumerate_cosets(reduction.pair, 2 * reduction.pair.ctx.n))
    recore = _cosets.normal_core(reduction.pair)
    effective = all(elem_is_identity(h) for h in recore)
    status = _verify.PASS if (before == after and effective) else _verify.FAIL
    return _verify.Verdict(
        "normal_core",
        status,
        _verify.Certificate(
            "orbit_list",
            {
                "core": [serialize(h) for h in core],
                "coset_count_before": before,
                "coset_count_after": after,
                "quotient_action_effective": effective,
                "quotient_degree": reduction.pair.ctx.n,
            },
        ),
    )


def _hausdorff_verdict(pair, word_budget) -> _verify.Verdict:
    wm = _metrics.WordMetric(pair.ctx, word_budget)
    metric = _metrics.HausdorffCosetMetric(pair, wm)
    cosets_all = enumerate_cosets(pair, 2 * pair.ctx.n)
    axioms = _verify.check_metric_axioms(
        metric.distance, cosets_all, sample_triples=len(cosets_all) ** 3 + 1
    )
    if axioms.status != _verify.PASS:
        axioms.check = "hausdorff"
        return axioms
    group = _cosets.group_elements(pair.ctx)
    pairs = [(a, b) for a in cosets_all for b in cosets_all]
    inv = _verify.check_invariance(
        metric.distance,
        lambda g, c: _cosets.left_mul(pair, g, c),
        group,
        pairs,
        keyof=lambda c: c.key(),
    )
    if inv.status != _verify.PASS:
        inv.check = "hausdorff"
        return inv
    table = {
        f"{a.key()}|{b.key()}": metric.distance(a, b)
        for a in cosets_all
        for b in cosets_all
    }
    return _verify.Verdict(
        "hausdorff",
        _verify.PASS,
        _verify.Certificate(
            "ball_enumeration",
            {"cosets": len(cosets_all), "group_order": len(group), "table": table},
        ),
    )


def run_gset_checks(cfg: dict, seed: int) -> list:
    spec = cfg["gset"]
    gset = build_gset(spec)
    budgets = {**DEFAULT_BUDGETS, **cfg.get("budgets", {})}
    checks = cfg["checks"]
    verdicts = []
    for check in checks["run"]:
        if check not in GSET_CHECKS:
            raise ConfigError(f"unknown gset check {check!r}")
        if check == "orbit_pairs":
            seeds = [
                (
                    _parse_point(spec["name"], a),
                    _parse_point(spec["name"], b),
                )
                for a, b in spec["seeds"]
            ]
            verdicts.append(
                _orbit_pairs_verdict(
                    gset, seeds, budgets["orbit"],
                    int(spec.get("degree_budget", 1000)),
                    seed,
                )
            )
        elif check == "stabilizer_probe":
            x = _parse_point(spec["name"], spec["probe_x"])
            ys = [_parse_point(spec["name"], y) for y in spec["probe_ys"]]
            res = _closure.stabilizer_orbit_probe(
                gset, x, ys, budgets["orbit"],
                max_word_len=int(spec.get("max_word_len", 3)),
            )
            status = res.verdict
            if status == "PASS" and res.sampled:
                status = _verify.SAMPLED
            kind = "orbit_list" if res.verdict == "PASS" else "divergence_trace"
            verdicts.append(
                _verify.Verdict(
                    "stabilizer_probe",
                    status,
                    _verify.Certificate(
                        kind,
                        {
                            "base_point": gset.encode(x),
                            "sampled": res.sampled,
                            "stabilizer_words": res.stabilizer_word_count,
                            "probes": {
                                gset.encode(p.point): p.to_dict() for p in res.probes
                            },
                        },
                    ),
                )
            )
        elif check == "closure_levels":
            windows = _gsets.odometer_windows(int(spec.get("windows_up_to", 10)))
            levels = _closure.truncated_closure_levels(gset, windows, budgets["orbit"])
            all_closed = all(lv.status == "closed" for lv in levels)
            compatible = all(
                lv.compatible_with_previous in (None, True) for lv in levels
            )
            status = _verify.PASS if (all_closed and compatible) else _verify.UNKNOWN
            if all_closed and not compatible:
                status = _verify.FAIL
            verdicts.append(
                _verify.Verdict(
                    "closure_levels",
                    status,
                    _verify.Certificate(
                        "orbit_list" if all_closed else "divergence_trace",
                        {"levels": [lv.to_dict() for lv in levels]},
                    ),
                )
            )
    return verdicts


def _orbit_pairs_verdict(gset, seeds, budget, degree_budget, seed) -> _verify.Verdict:
    try:
        graph = _metrics.build_orbit_pairs_graph(
            gset, seeds, budget, degree_budget
        )
    except NotLocallyFinite as exc:
        return _verify.Verdict(
            "orbit_pairs",
            _verify.UNKNOWN,
            _verify.Certificate(
                "divergence_trace",
                {"refused": "NotLocallyFinite", "offender": exc.offender},
            ),
        )
    points = sorted(graph.adjacency, key=gset.encode)
    degrees = sorted({graph.degree(p) for p in points})
    # disconnection probe between the extremes of the explored region
    disconnected = []
    if len(points) >= 2:
        rng = random.Random(seed)
        sample = [points[0], points[-1]] + [rng.choice(points) for _ in range(4)]
        for i in range(len(sample) - 1):
            d = graph.distance(sample[i], sample[i + 1], 64)
            if not d.exact:
                disconnected.append(
                    [gset.encode(sample[i]), gset.encode(sample[i + 1]), d.status]
                )
    status = _verify.PASS if graph.complete else _verify.SAMPLED
    return _verify.Verdict(
        "orbit_pairs",
        status,
        _verify.Certificate(
            "orbit_list",
            {
                "explored_points": len(points),
                "pair_orbit_complete": graph.complete,
                "visited_pairs": graph.visited_pairs,
                "degrees_seen": degrees,
                "disconnected_witnesses": disconnected,
            },
        ),
    )


def run_finite_checks(cfg: dict) -> list:
    moduli = [int(m) for m in cfg["finite_action"]["moduli"]]
    points = []

    def build_points(prefix, rest):
        if not rest:
            points.append(tuple(prefix))
            return
        for r in range(rest[0]):
            build_points(prefix + [r], rest[1:])

    build_points([], moduli)
    index = {p: i for i, p in enumerate(points)}
    gen = tuple(
        index[tuple((p[i] + 1) % moduli[i] for i in range(len(moduli)))]
        for p in points
    )
    action = _closure.FiniteAction(points=tuple(points), gen_maps={"diag_plus1": gen})
    summary = _closure.closure_finite(action)
    # orbit-stabilizer consistency on every point
    consistent = all(
        summary.order == len(orbit) * summary.stabilizer_orders[orbit[0]]
        for orbit in summary.orbits
    )
    verdict = _verify.Verdict(
        "closure_finite",
        _verify.PASS if consistent else _verify.FAIL,
        _verify.Certificate("orbit_list", summary.to_dict()),
    )
    checks = cfg["checks"]
    for check in checks["run"]:
        if check not in FINITE_CHECKS:
            raise ConfigError(f"unknown finite-action check {check!r}")
    return [verdict]


# ---------------------------------------------------------------------------
# report assembly, cache
# ---------------------------------------------------------------------------

class ReportCache:
    """Optional on-disk cache keyed by config hash; purely an optimization.

    Values are canonical check outputs; last writer wins, collisions are
    benign because identical keys hold identical canonical data.
    """

    def __init__(self, directory: Path, config_hash: str):
        self.path = directory / f"{config_hash}.json"
        try:
            self.data = json.loads(self.path.read_text())
        except (OSError, ValueError):
            self.data = {}

    def get(self, key):
        return self.data.get(key)

    def put(self, key, value):
        self.data[key] = value
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(json.dumps(self.data, sort_keys=True))


def config_hash(cfg: dict) -> str:
    return hashlib.sha256(
        json.dumps(cfg, sort_keys=True, default=str).encode()
    ).hexdigest()[:16]


def run_experiment(cfg: dict, seed: int | None = None, cache=None) -> dict:
    start = time.monotonic()
    effective_seed = int(cfg.get("seed", 0)) if seed is None else seed
    if "pair" in cfg:
        verdicts = run_pair_checks(cfg, effective_seed, cache)
    elif "gset" in cfg:
        verdicts = run_gset_checks(cfg, effective_seed)
    else:
        verdicts = run_finite_checks(cfg)
    report = {
        "artifact_version": __version__,
        "config": cfg,
        "seed": effective_seed,
        "verdicts": [
            {
                **v.to_dict(),
                "replay": f"cosetmetric run <config:{cfg['name']}> --seed {effective_seed}",
            }
            for v in verdicts
        ],
        "summary": {
            "counts": {
                status: sum(1 for v in verdicts if v.status == status)
                for status in ("PASS", "FAIL", "UNKNOWN", "SAMPLED")
            },
            "expected_negative": bool(cfg.get("expected_negative", False)),
        },
        "timing": {"total_seconds": round(time.monotonic() - start, 6)},
    }
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"


def strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}


# ---------------------------------------------------------------------------
# bundled example configs
# ---------------------------------------------------------------------------

def bundled_config_names() -> list[str]:
    pkg = resources.files("cosetmetric") / "configs"
    return sorted(p.name[:-5] for p in pkg.iterdir() if p.name.endswith(".toml"))


def bundled_config_path(name: str) -> Path:
    pkg = resources.files("cosetmetric") / "configs" / f"{name}.toml"
    if not pkg.is_file():
        raise ConfigError(f"no bundled config named {name!r}")
    return Path(str(pkg))


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

def _resolve_config_arg(arg: str) -> Path:
    p = Path(arg)
    if p.exists():
        return p
    if arg.endswith(".toml"):
        raise ConfigError(f"config file not found: {arg}")
    return bundled_config_path(arg)


def cmd_run(args) -> int:
    try:
        path = _resolve_config_arg(args.config)
        cfg = load_config(path)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    cache = None
    if not args.no_cache:
        cache = ReportCache(out_dir / ".cache", config_hash(cfg))
    try:
        report = run_experiment(cfg, seed=args.seed, cache=cache)
    except BudgetExceeded as exc:
        print(f"budget exhausted before any check completed: {exc}", file=sys.stderr)
        return 3
    except CosetMetricError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    out_path = out_dir / f"{cfg['name']}_report.json"
    out_path.write_text(report_json(report))
    counts = report["summary"]["counts"]
    print(f"{cfg['name']}: {counts} -> {out_path}")
    return 1 if counts["FAIL"] else 0


def cmd_export_dot(args) -> int:
    try:
        path = _resolve_config_arg(args.config)
        cfg = load_config(path)
        if "pair" not in cfg:
            raise ConfigError("export-dot requires a [pair] config")
        pair = build_pair(cfg["pair"])
        budgets = {**DEFAULT_BUDGETS, **cfg.get("budgets", {})}
        center = coset(pair, pair.ctx.parse(args.center)) if args.center else identity_coset(pair)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CosetMetricError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        graph = _metrics.build_relative_cayley(
            pair, pair.ctx.generators, budgets["orbit"]
        )
        dot = _metrics.export_dot(graph, center, args.radius, budgets["ball"])
    except NotLocallyFinite as exc:
        print(f"construction refused (NotLocallyFinite): {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    if args.out_file:
        Path(args.out_file).write_text(dot)
        print(f"wrote {args.out_file}")
    else:
        sys.stdout.write(dot)
    return 0


def cmd_list_examples(_args) -> int:
    for name in bundled_config_names():
        print(name)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cosetmetric",
        description="invariant proper metrics on coset spaces: construct and verify",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run an experiment config, write a JSON report")
    p_run.add_argument("config", help="config path or bundled config name")
    p_run.add_argument("--out", default="reports", help="output directory")
    p_run.add_argument("--no-cache", action="store_true", help="disable the on-disk cache")
    p_run.add_argument("--seed", type=int, default=None, help="override the config seed")
    p_run.set_defaults(fn=cmd_run)

    p_dot = sub.add_parser("export-dot", help="export a ball of the coset graph as DOT")
    p_dot.add_argument("config", help="config path or bundled config name")
    p_dot.add_argument("--center", default=None, help="center element (serialized)")
    p_dot.add_argument("--radius", type=int, default=2)
    p_dot.add_argument("--out-file", default=None)
    p_dot.set_defaults(fn=cmd_export_dot)

    p_list = sub.add_parser("list-examples", help="list bundled example configs")
    p_list.set_defaults(fn=cmd_list_examples)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
