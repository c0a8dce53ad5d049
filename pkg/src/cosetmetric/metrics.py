"""Construction of proper invariant metrics on coset spaces and G-sets.

Four constructions:
  * relative Cayley graph on G/H: edges xH -- yH iff x^-1 y in H S^sym H;
    its geodesic distance is the invariant metric, and the construction
    refuses (NotLocallyFinite) exactly when a generating double coset holds
    infinitely many cosets -- the almost-normality obstruction.
  * orbit-of-pairs graph on a countable G-set: edges are the G-orbit closure
    of seed pairs under the diagonal action, symmetrized.
  * Hausdorff coset metric for a finite subgroup inside a group with a word
    metric.
  * pullback of a metric along a verified coset-space isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cosets as _cosets
from .cosets import Coset, HeckePair, coset, h_orbit_of_coset, identity_coset, left_mul
from .elements import elem_inv, elem_mul, serialize
from .errors import (
    BudgetExceeded,
    NotBijectiveOnCosets,
    NotHomomorphism,
    NotLocallyFinite,
    SubgroupNotFinite,
)


# ---------------------------------------------------------------------------
# distances and balls
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Distance:
    """Geodesic distance result.

    status "exact": `value` is the distance.  status "unknown": the points
    were not connected within `searched_radius` (BFS never proves
    unreachability in an infinite graph).  status "unreachable": both BFS
    frontiers were exhausted without meeting -- only possible when the
    reachable component is finite.
    """

    status: str  # "exact" | "unknown" | "unreachable"
    value: int | None = None
    searched_radius: int | None = None

    @property
    def exact(self) -> bool:
        return self.status == "exact"


@dataclass
class Ball:
    center: object
    radius: int
    members: list
    layer_sizes: list[int]

    def __len__(self) -> int:
        return len(self.members)


def graph_distance(graph, a, b, max_radius: int) -> Distance:
    """Bidirectional BFS geodesic distance, exact up to max_radius.

    Any path of length <= radius_a + radius_b passes through a vertex seen
    by both searches, and every such vertex updates `best` at its second
    insertion, so expanding until radius_a + radius_b covers `best` (or
    max_radius) makes the answer exact.
    """
    if a == b:
        return Distance(status="exact", value=0)
    dist_a = {a: 0}
    dist_b = {b: 0}
    frontier_a = [a]
    frontier_b = [b]
    radius_a = radius_b = 0
    best = None
    while True:
        covered = radius_a + radius_b
        if best is not None and best <= covered:
            return Distance(status="exact", value=best)
        if covered >= max_radius:
            if best is not None and best <= max_radius:
                return Distance(status="exact", value=best)
            return Distance(status="unknown", searched_radius=max_radius)
        if not frontier_a and not frontier_b:
            if best is not None:
                return Distance(status="exact", value=best)
            return Distance(status="unreachable", searched_radius=covered)
        # expand the smaller live frontier
        if frontier_a and (not frontier_b or len(frontier_a) <= len(frontier_b)):
            frontier, dist, other, radius = frontier_a, dist_a, dist_b, radius_a
            radius_a += 1
        else:
            frontier, dist, other, radius = frontier_b, dist_b, dist_a, radius_b
            radius_b += 1
        nxt = []
        for p in frontier:
            for q in graph.neighbors(p):
                if q not in dist:
                    dist[q] = radius + 1
                    nxt.append(q)
                    if q in other:
                        total = radius + 1 + other[q]
                        if best is None or total < best:
                            best = total
        if frontier is frontier_a:
            frontier_a = nxt
        else:
            frontier_b = nxt


def ball(graph, center, r: int, budget: int = _cosets.DEFAULT_BUDGET) -> Ball:
    """Exact closed ball by BFS, budget-guarded."""
    if r < 0:
        raise ValueError("radius must be >= 0")
    seen = {center}
    members = [center]
    layer_sizes = [1]
    frontier = [center]
    for _ in range(r):
        nxt = []
        for p in frontier:
            for q in graph.neighbors(p):
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > budget:
                        raise BudgetExceeded(
                            f"ball exceeded budget {budget}", visited=len(seen)
                        )
        members.extend(nxt)
        layer_sizes.append(len(nxt))
        frontier = nxt
    return Ball(center=center, radius=r, members=members, layer_sizes=layer_sizes)


# ---------------------------------------------------------------------------
# relative Cayley graph on G/H
# ---------------------------------------------------------------------------

@dataclass
class RelativeCayleyGraph:
    """G-invariant locally finite graph on G/H.

    Edges xH -- yH iff x^-1 y lies in H S^sym H.  Neighbours of xH are
    {(x u)H : uH in the H-orbit of sH, s in S^sym}, which is independent of
    the representative x; the graph is vertex-transitive under G.
    """

    pair: HeckePair
    gens_sym: list
    edge_orbits: dict  # serialize(s) -> OrbitResult
    edge_elements: list = field(default_factory=list)
    _memo: dict = field(default_factory=dict, repr=False)

    def neighbors(self, c: Coset) -> tuple:
        cached = self._memo.get(c)
        if cached is None:
            out = {}
            for u in self.edge_elements:
                d = coset(self.pair, elem_mul(c.rep, u))
                if d != c:
                    out[d.key()] = d
            cached = tuple(out[k] for k in sorted(out))
            self._memo[c] = cached
        return cached

    @staticmethod
    def point_key(c: Coset) -> str:
        return c.key()

    @property
    def base(self) -> Coset:
        return identity_coset(self.pair)

    def translate(self, g, c: Coset) -> Coset:
        return left_mul(self.pair, g, c)

    def distance(self, a: Coset, b: Coset, max_radius: int) -> Distance:
        return graph_distance(self, a, b, max_radius)


def build_relative_cayley(
    pair: HeckePair, gens, budget: int = _cosets.DEFAULT_BUDGET
) -> RelativeCayleyGraph:
    """Construct the relative Cayley graph, or refuse.

    Refusal (NotLocallyFinite, naming the offending generator) happens
    exactly when some generating double coset HsH holds infinitely many
    cosets within budget -- the almost-normality obstruction: no proper
    invariant compatible metric exists in that case.
    """
    sym = {}
    for s in gens:
        pair.ctx.validate(s)
        sym[serialize(s)] = s
        si = elem_inv(s)
        sym[serialize(si)] = si
    edge_orbits = {}
    edge_elements = {}
    base = identity_coset(pair)
    for key in sorted(sym):
        s = sym[key]
        orbit = h_orbit_of_coset(pair, s, budget)
        if not orbit.finite:
            raise NotLocallyFinite(
                f"H-orbit of {key}H did not close within budget {budget}",
                offender=key,
                trace=orbit,
            )
        edge_orbits[key] = orbit
        for c in orbit.cosets:
            if c != base:
                edge_elements[c.key()] = c.rep
    return RelativeCayleyGraph(
        pair=pair,
        gens_sym=[sym[k] for k in sorted(sym)],
        edge_orbits=edge_orbits,
        edge_elements=[edge_elements[k] for k in sorted(edge_elements)],
    )


# ---------------------------------------------------------------------------
# orbit-of-pairs graph on a countable G-set
# ---------------------------------------------------------------------------

@dataclass
class OrbitPairsGraph:
    """Invariant graph on a G-set from the orbit closure of seed pairs.

    `complete` is True when the pair-orbit closed within budget; otherwise
    the adjacency is the explored portion only and downstream verdicts must
    be treated as sampled.
    """

    gset: object
    adjacency: dict
    complete: bool
    visited_pairs: int
    frontier_sizes: list[int]

    def neighbors(self, p) -> tuple:
        return self.adjacency.get(p, ())

    def degree(self, p) -> int:
        return len(self.adjacency.get(p, ()))

    def point_key(self, p) -> str:
        return self.gset.encode(p)

    def distance(self, a, b, max_radius: int) -> Distance:
        return graph_distance(self, a, b, max_radius)


def build_orbit_pairs_graph(
    gset,
    seeds,
    budget: int = _cosets.DEFAULT_BUDGET,
    degree_budget: int | None = None,
) -> OrbitPairsGraph:
    """Close the seed pairs under the diagonal action of the generators.

    Raises NotLocallyFinite naming the first point whose accumulated degree
    exceeds degree_budget (default: budget).
    """
    if degree_budget is None:
        degree_budget = budget
    seeds = [tuple(p) if isinstance(p, list) else p for p in seeds]
    for a, b in seeds:
        if a == b:
            raise ValueError("seed pairs must have distinct endpoints")
    adjacency: dict = {}

    def add_edge(a, b):
        for u, v in ((a, b), (b, a)):
            lst = adjacency.setdefault(u, [])
            if v not in lst:
                lst.append(v)
                if len(lst) > degree_budget:
                    raise NotLocallyFinite(
                        f"degree of {gset.encode(u)} exceeded {degree_budget}",
                        offender=gset.encode(u),
                    )

    gen_words = gset.generator_words()
    seen = set()
    frontier = []
    for a, b in seeds:
        pair_pt = (a, b)
        if pair_pt not in seen:
            seen.add(pair_pt)
            frontier.append(pair_pt)
            add_edge(a, b)
    frontier_sizes = [len(frontier)]
    complete = True
    while frontier:
        nxt = []
        for a, b in frontier:
            for w in gen_words:
                image = (gset.act(w, a), gset.act(w, b))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
                    add_edge(*image)
                    if len(seen) > budget:
                        complete = False
                        break
            if not complete:
                break
        if not complete:
            frontier_sizes.append(len(nxt))
            break
        if nxt:
            frontier_sizes.append(len(nxt))
        frontier = nxt
    # deterministic neighbour order
    for p in adjacency:
        adjacency[p] = tuple(sorted(adjacency[p], key=gset.encode))
    return OrbitPairsGraph(
        gset=gset,
        adjacency=adjacency,
        complete=complete,
        visited_pairs=len(seen),
        frontier_sizes=frontier_sizes,
    )


# ---------------------------------------------------------------------------
# word metric and Hausdorff coset metric
# ---------------------------------------------------------------------------

class WordMetric:
    """Generator word-length metric d(u, v) = |u^-1 v|_S on a group.

    Left-invariant by construction.  Distances are computed by BFS from the
    identity over the context's symmetric generator set and memoized; the
    BFS is budget-guarded for infinite groups.
    """

    def __init__(self, ctx, budget: int = _cosets.DEFAULT_BUDGET):
        self.ctx = ctx
        self.budget = budget
        self._dist = {ctx.identity(): 0}
        self._frontier = [ctx.identity()]
        self._radius = 0

    def _expand_to(self, radius: int):
        while self._radius < radius and self._frontier:
            nxt = []
            for e in self._frontier:
                for s in self.ctx.generators:
                    p = elem_mul(e, s)
                    if p not in self._dist:
                        self._dist[p] = self._radius + 1
                        nxt.append(p)
                        if len(self._dist) > self.budget:
                            raise BudgetExceeded(
                                f"word-metric BFS exceeded {self.budget}",
                                visited=len(self._dist),
                            )
            self._frontier = nxt
            self._radius += 1

    def length(self, g) -> int:
        while g not in self._dist:
            if not self._frontier:
                raise BudgetExceeded(
                    f"{serialize(g)} not reachable from generators", visited=len(self._dist)
                )
            self._expand_to(self._radius + 1)
        return self._dist[g]

    def dist(self, u, v) -> int:
        return self.length(elem_mul(elem_inv(u), v))


def hausdorff_distance(pair: HeckePair, word_metric: WordMetric, g1, g2) -> int:
    """Hausdorff distance between the cosets g1 H and g2 H:

        max( max_{h1} min_{h2} d(g1 h1, g2 h2),
             max_{h2} min_{h1} d(g1 h1, g2 h2) )

    for the word metric d on G.  Requires H finite (enumerable).
    """
    try:
        h_elems = _cosets.subgroup_elements(pair)
    except Exception as exc:
        raise SubgroupNotFinite(str(exc)) from exc
    left = [elem_mul(g1, h) for h in h_elems]
    right = [elem_mul(g2, h) for h in h_elems]
    d = [[word_metric.dist(u, v) for v in right] for u in left]
    sup_inf_lr = max(min(row) for row in d)
    sup_inf_rl = max(min(d[i][j] for i in range(len(left))) for j in range(len(right)))
    return max(sup_inf_lr, sup_inf_rl)


class HausdorffCosetMetric:
    """d~ on G/H for finite H; a proper G-invariant compatible metric."""

    def __init__(self, pair: HeckePair, word_metric: WordMetric):
        self.pair = pair
        self.word_metric = word_metric
        self._memo = {}

    def distance(self, c1: Coset, c2: Coset) -> int:
        key = tuple(sorted((c1.key(), c2.key())))
        if key not in self._memo:
            self._memo[key] = hausdorff_distance(
                self.pair, self.word_metric, c1.rep, c2.rep
            )
        return self._memo[key]


# ---------------------------------------------------------------------------
# pullback metric along a coset-space isomorphism
# ---------------------------------------------------------------------------

def build_homomorphism(src_ctx, dst_ctx, gen_images: dict):
    """Extend generator images to a full map on a finite Perm group.

    `gen_images` maps serialize(source generator) -> target element.  The
    extension is built by BFS over the source group and then verified
    exhaustively on all products; any inconsistency raises NotHomomorphism
    with a witness pair.
    """
    src_elems = _cosets.group_elements(src_ctx)
    phi = {src_ctx.identity(): dst_ctx.identity()}
    frontier = [src_ctx.identity()]
    while frontier:
        nxt = []
        for g in frontier:
            for s in src_ctx.generators:
                key = serialize(s)
                if key not in gen_images:
                    raise NotHomomorphism(f"no image given for generator {key}")
                p = elem_mul(s, g)
                image = elem_mul(gen_images[key], phi[g])
                if p in phi:
                    if phi[p] != image:
                        raise NotHomomorphism(
                            "inconsistent images along two words",
                            witness=(serialize(p), serialize(phi[p]), serialize(image)),
                        )
                else:
                    phi[p] = image
                    nxt.append(p)
        frontier = nxt
    if len(phi) != len(src_elems):
        raise NotHomomorphism("generators do not generate the source group")
    for a in src_elems:
        for b in src_elems:
            if phi[elem_mul(a, b)] != elem_mul(phi[a], phi[b]):
                raise NotHomomorphism(
                    "product check failed",
                    witness=(serialize(a), serialize(b)),
                )
    return phi


@dataclass
class PullbackMetric:
    """Metric on source G/H pulled back along a verified isomorphism of
    coset spaces: d(xH, yH) = d'(phi(x)H', phi(y)H')."""

    src_pair: HeckePair
    dst_pair: HeckePair
    phi: dict
    dst_metric: object  # exposes .distance(Coset, Coset)

    def distance(self, c1: Coset, c2: Coset):
        d1 = coset(self.dst_pair, self.phi[c1.rep])
        d2 = coset(self.dst_pair, self.phi[c2.rep])
        return self.dst_metric.distance(d1, d2)


def pullback_metric(
    src_pair: HeckePair, dst_pair: HeckePair, gen_images: dict, dst_metric
) -> PullbackMetric:
    """Verify the two bijectivity conditions and pull the target metric back.

    Conditions checked exhaustively on the finite Perm pairs:
      * "preimage":   H = phi^-1(H'), i.e. phi(g) in H'  <=>  g in H;
      * "surjective": G' = phi(G) H', i.e. every G'-coset of H' is hit.
    """
    phi = build_homomorphism(src_pair.ctx, dst_pair.ctx, gen_images)
    for g in _cosets.group_elements(src_pair.ctx):
        if _cosets.contains(src_pair, g) != _cosets.contains(dst_pair, phi[g]):
            raise NotBijectiveOnCosets(
                f"H != phi^-1(H'): witness {serialize(g)}", condition="preimage"
            )
    hit = {coset(dst_pair, phi[g]) for g in phi}
    all_dst = {coset(dst_pair, g) for g in _cosets.group_elements(dst_pair.ctx)}
    if hit != all_dst:
        missing = sorted(c.key() for c in all_dst - hit)
        raise NotBijectiveOnCosets(
            f"G' != phi(G) H': unreached cosets {missing}", condition="surjective"
        )
    return PullbackMetric(
        src_pair=src_pair, dst_pair=dst_pair, phi=phi, dst_metric=dst_metric
    )


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def export_dot(graph, center, radius: int, budget: int = _cosets.DEFAULT_BUDGET) -> str:
    """DOT text of the closed ball around center: deterministic ordering,
    vertices labeled by canonical serializations."""
    b = ball(graph, center, radius, budget)
    keyfn = getattr(graph, "point_key", None)
    if keyfn is None:
        def keyfn(p):
            return p.key() if hasattr(p, "key") else str(p)
    members = sorted(b.members, key=keyfn)
    inside = set(members)
    lines = ["graph ball {"]
    for p in members:
        lines.append(f'  "{keyfn(p)}";')
    edges = set()
    for p in members:
        for q in graph.neighbors(p):
            if q in inside:
                edge = tuple(sorted((keyfn(p), keyfn(q))))
                edges.add(edge)
    for u, v in sorted(edges):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
