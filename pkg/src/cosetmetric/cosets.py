"""Hecke pairs: subgroup oracles, canonical coset representatives, H-orbits.

The H-orbit of a coset gH is the engine behind every finiteness criterion in
this package: H is almost normal iff each such orbit is finite, and the
orbit certificates double as the edge labels of the invariant coset graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .elements import (
    Affine,
    BSWord,
    GroupCtx,
    Perm,
    RatMatrix,
    elem_inv,
    elem_mul,
    mat_det,
    serialize,
    sort_key,
)
from .errors import (
    FamilyMismatch,
    NotFiniteFamily,
    NotNormal,
    OrbitNotFinite,
    BudgetExceeded,
)

DEFAULT_BUDGET = 10_000


# ---------------------------------------------------------------------------
# subgroup specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PermSubgroup:
    """Subgroup of Perm(n) given by generators (enumerated on demand)."""

    gens: tuple[Perm, ...]

    kind = "perm_subgroup"


@dataclass(frozen=True)
class IntegerMatrices:
    """H = SL_n(Z) inside SL_n(Q)."""

    kind = "integer_matrices"


@dataclass(frozen=True)
class IntegerTranslations:
    """H = {(1, k) : k in Z} inside AffineQ."""

    kind = "integer_translations"


@dataclass(frozen=True)
class PositiveDilations:
    """H = {(a, 0) : a in Q+*} inside AffineQ.

    Q+* is not finitely generated, so orbit enumeration falls back to the
    sampled schedule {(p/q, 0) : p, q <= sample_bound}; results derived from
    it are flagged `sampled` and never certified as exhaustive.
    """

    sample_bound: int = 5

    kind = "positive_dilations"


@dataclass(frozen=True)
class CyclicX:
    """H = <x> inside BS(m, n)."""

    kind = "cyclic_x"


@dataclass(frozen=True)
class HeckePair:
    ctx: GroupCtx
    subgroup: object

    def describe(self) -> str:
        return f"{self.ctx.family}/{self.subgroup.kind}"


@dataclass(frozen=True)
class Coset:
    """Canonicalized left coset gH; `rep` is always coset_rep-fixed."""

    rep: object
    pair: HeckePair = field(compare=False, hash=False, repr=False)

    def key(self) -> str:
        return serialize(self.rep)


@dataclass(frozen=True)
class DoubleCoset:
    """Canonical label for HgH: the cmp-minimal coset representative."""

    rep: object

    def key(self) -> str:
        return serialize(self.rep)


@dataclass
class OrbitResult:
    """Certificate of an H-orbit enumeration on G/H (or a G-set).

    status "finite": `cosets` is closed under the acting generators and
    pairwise distinct.  status "budget_exceeded": a semi-decision trace;
    never a claim of infiniteness.  `sampled` marks enumerations driven by
    a sampled (non-exhaustive) generator schedule.
    """

    status: str  # "finite" | "budget_exceeded"
    cosets: list
    visited: int
    frontier_sizes: list[int]
    sampled: bool = False

    @property
    def finite(self) -> bool:
        return self.status == "finite"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "size": len(self.cosets) if self.finite else None,
            "visited": self.visited,
            "frontier_sizes": self.frontier_sizes,
            "sampled": self.sampled,
            "cosets": [c.key() for c in self.cosets] if self.finite else None,
        }


# ---------------------------------------------------------------------------
# membership oracles
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _enumerate_perm_group(gens: tuple[Perm, ...], degree: int) -> tuple[Perm, ...]:
    """All elements generated by `gens` (plus inverses), BFS closure."""
    identity = Perm(tuple(range(degree)))
    sym = list(gens) + [elem_inv(g) for g in gens]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for s in sym:
                p = elem_mul(s, e)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return tuple(sorted(seen, key=sort_key))


def subgroup_elements(pair: HeckePair) -> tuple[Perm, ...]:
    """Enumerate H (finite Perm subgroups only)."""
    if not isinstance(pair.subgroup, PermSubgroup):
        raise NotFiniteFamily(
            f"subgroup {pair.subgroup.kind} is not finitely enumerable"
        )
    return _enumerate_perm_group(pair.subgroup.gens, pair.ctx.n)


def contains(pair: HeckePair, g) -> bool:
    """Exact membership of g in H."""
    pair.ctx.validate(g)
    sub = pair.subgroup
    if isinstance(sub, IntegerMatrices):
        if any(x.denominator != 1 for row in g.rows for x in row):
            return False
        return mat_det(g) == 1
    if isinstance(sub, IntegerTranslations):
        return g.a == 1 and g.b.denominator == 1
    if isinstance(sub, PositiveDilations):
        return g.b == 0
    if isinstance(sub, CyclicX):
        return len(g.word) == 0 or (len(g.word) == 1 and g.word[0][0] == "x")
    if isinstance(sub, PermSubgroup):
        return g in set(subgroup_elements(pair))
    raise FamilyMismatch(f"unknown subgroup spec {sub!r}")


# ---------------------------------------------------------------------------
# canonical coset representatives
# ---------------------------------------------------------------------------

def _integer_column_hnf(rows: list[list[int]]) -> list[list[int]]:
    """Column-style Hermite normal form of a nonsingular integer matrix.

    Right multiplication by GL_n(Z): lower triangular, positive diagonal,
    and 0 <= A[i][j] < A[i][i] for j < i.  Unique per coset.
    """
    n = len(rows)
    a = [list(r) for r in rows]

    def col(j):
        return [a[i][j] for i in range(n)]

    def addmul_col(dst, src, q):
        for i in range(n):
            a[i][dst] += q * a[i][src]

    def swap_cols(j, k):
        for i in range(n):
            a[i][j], a[i][k] = a[i][k], a[i][j]

    for i in range(n):
        # gcd sweep on row i over columns i..n-1
        while True:
            nz = [j for j in range(i, n) if a[i][j] != 0]
            if not nz:
                raise FamilyMismatch("singular matrix in HNF")  # unreachable for valid input
            if len(nz) == 1:
                if nz[0] != i:
                    swap_cols(i, nz[0])
                break
            piv = min(nz, key=lambda j: abs(a[i][j]))
            for j in nz:
                if j != piv:
                    q = a[i][j] // a[i][piv]
                    if q:
                        addmul_col(j, piv, -q)
        if a[i][i] < 0:
            for r in range(n):
                a[r][i] = -a[r][i]
        for j in range(i):
            q = a[i][j] // a[i][i]
            if q:
                addmul_col(j, i, -q)
    return a


def rational_hnf_rep(g: RatMatrix, det_one: bool = True) -> RatMatrix:
    """Canonical representative of g GL_n(Z) (sign-fixed into the SL coset).

    Scale by the lcm of denominators, run integer column HNF, unscale.  If
    the implied unimodular factor has determinant -1, negate the last column
    (the GL-coset splits into two SL_n(Z)-cosets; this picks one
    deterministically).  For det-1 inputs the positive-diagonal HNF already
    has determinant +1, so the sign-fix is a no-op there.
    """
    n = g.size
    scale = lcm(*[x.denominator for row in g.rows for x in row])
    int_rows = [[int(x * scale) for x in row] for row in g.rows]
    h = _integer_column_hnf(int_rows)
    rep = RatMatrix(tuple(tuple(Fraction(h[i][j], scale) for j in range(n)) for i in range(n)))
    if det_one:
        det_u = mat_det(rep) / mat_det(g)
        if det_u == -1:
            rep = RatMatrix(
                tuple(
                    tuple(-x if j == n - 1 else x for j, x in enumerate(row))
                    for row in rep.rows
                )
            )
    return rep


def coset_rep(pair: HeckePair, g):
    """Canonical representative of gH: deterministic and idempotent."""
    pair.ctx.validate(g)
    sub = pair.subgroup
    if isinstance(sub, IntegerMatrices):
        return rational_hnf_rep(g, det_one=pair.ctx.det_one)
    if isinstance(sub, IntegerTranslations):
        # gH = {(a, a k + b)}: reduce b into [0, a)
        b = g.b - g.a * (g.b / g.a).__floor__()
        return Affine(g.a, b)
    if isinstance(sub, PositiveDilations):
        # gH = {(a a', b)}: the translation part is a complete invariant
        return Affine(Fraction(1), g.b)
    if isinstance(sub, CyclicX):
        word = g.word
        if word and word[-1][0] == "x":
            word = word[:-1]
        return BSWord(g.m, g.n, word)
    if isinstance(sub, PermSubgroup):
        return min((elem_mul(g, h) for h in subgroup_elements(pair)), key=sort_key)
    raise FamilyMismatch(f"unknown subgroup spec {sub!r}")


def coset(pair: HeckePair, g) -> Coset:
    return Coset(rep=coset_rep(pair, g), pair=pair)


def identity_coset(pair: HeckePair) -> Coset:
    return coset(pair, pair.ctx.identity())


def left_mul(pair: HeckePair, g, c: Coset) -> Coset:
    """g . (xH) = (g x)H, recanonicalized."""
    return coset(pair, elem_mul(g, c.rep))


# ---------------------------------------------------------------------------
# subgroup generator schedules
# ---------------------------------------------------------------------------

def _sl_elementary_gens(n: int) -> list[RatMatrix]:
    """Elementary matrices E_ij(+-1): a generating set of SL_n(Z)."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for v in (1, -1):
                rows = [
                    [Fraction(int(r == c)) for c in range(n)] for r in range(n)
                ]
                rows[i][j] = Fraction(v)
                gens.append(RatMatrix(tuple(tuple(r) for r in rows)))
    return gens


def _dilation_schedule(bound: int) -> list[Affine]:
    """Sampled dilations {(p/q, 0) : 1 <= p, q <= bound, gcd(p, q) = 1}."""
    out = []
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            if gcd(p, q) == 1 and (p, q) != (1, 1):
                out.append(Affine(Fraction(p, q), Fraction(0)))
    return sorted(out, key=sort_key)


def subgroup_generators(pair: HeckePair) -> tuple[list, bool]:
    """(symmetric generator list for H, sampled?).

    `sampled` is True when the list is a documented sample schedule rather
    than a true generating set (PositiveDilations only).
    """
    sub = pair.subgroup
    if isinstance(sub, PermSubgroup):
        gens = list(sub.gens) + [elem_inv(g) for g in sub.gens]
        return gens, False
    if isinstance(sub, IntegerMatrices):
        return _sl_elementary_gens(pair.ctx.n), False
    if isinstance(sub, IntegerTranslations):
        one = Fraction(1)
        return [Affine(one, Fraction(1)), Affine(one, Fraction(-1))], False
    if isinstance(sub, CyclicX):
        m, n = pair.ctx.bs_params
        from .elements import bs_word

        return [bs_word(m, n, [("x", 1)]), bs_word(m, n, [("x", -1)])], False
    if isinstance(sub, PositiveDilations):
        return _dilation_schedule(sub.sample_bound), True
    raise FamilyMismatch(f"unknown subgroup spec {sub!r}")


# ---------------------------------------------------------------------------
# H-orbit enumeration on G/H
# ---------------------------------------------------------------------------

def h_orbit_of_coset(pair: HeckePair, g, budget: int = DEFAULT_BUDGET) -> OrbitResult:
    """BFS closure of the coset gH under left multiplication by H.

    Finite results are true certificates (closed under the generators);
    budget exhaustion is a semi-decision, never a claim of infiniteness.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    gens, sampled = subgroup_generators(pair)
    start = coset(pair, g)
    seen = {start}
    frontier = [start]
    frontier_sizes = [1]
    while frontier:
        nxt = []
        for c in frontier:
            for h in gens:
                d = left_mul(pair, h, c)
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
                    if len(seen) > budget:
                        frontier_sizes.append(len(nxt))
                        return OrbitResult(
                            status="budget_exceeded",
                            cosets=[],
                            visited=len(seen),
                            frontier_sizes=frontier_sizes,
                            sampled=sampled,
                        )
        if nxt:
            frontier_sizes.append(len(nxt))
        frontier = nxt
    ordered = sorted(seen, key=lambda c: c.key())
    return OrbitResult(
        status="finite",
        cosets=ordered,
        visited=len(seen),
        frontier_sizes=frontier_sizes,
        sampled=sampled,
    )


def double_coset_rep(pair: HeckePair, g, budget: int = DEFAULT_BUDGET) -> DoubleCoset:
    """cmp-minimal coset representative over the H-orbit of gH."""
    orbit = h_orbit_of_coset(pair, g, budget)
    if not orbit.finite:
        raise OrbitNotFinite(
            f"H-orbit of {serialize(g)}H did not close within budget", result=orbit
        )
    return DoubleCoset(rep=min((c.rep for c in orbit.cosets), key=sort_key))


def count_cosets_in_double_coset(
    pair: HeckePair, g, budget: int = DEFAULT_BUDGET
) -> int:
    """|HgH / H| = size of the finite H-orbit of gH."""
    orbit = h_orbit_of_coset(pair, g, budget)
    if not orbit.finite:
        raise OrbitNotFinite(
            f"H-orbit of {serialize(g)}H did not close within budget", result=orbit
        )
    return len(orbit.cosets)


def enumerate_cosets(
    pair: HeckePair, radius: int, budget: int = DEFAULT_BUDGET
) -> list[Coset]:
    """All cosets wH for words w of length <= radius in the symmetric
    generator set of the context, deduplicated (sorted by canonical key)."""
    if not pair.ctx.generators:
        raise FamilyMismatch("context has no generators")
    seen = {identity_coset(pair)}
    frontier = list(seen)
    for _ in range(radius):
        nxt = []
        for c in frontier:
            for s in pair.ctx.generators:
                d = left_mul(pair, s, c)
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
                    if len(seen) > budget:
                        raise BudgetExceeded(
                            f"more than {budget} cosets within radius {radius}",
                            visited=len(seen),
                        )
        frontier = nxt
    return sorted(seen, key=lambda c: c.key())


# ---------------------------------------------------------------------------
# normal core and quotient reduction (finite Perm family)
# ---------------------------------------------------------------------------

def group_elements(ctx: GroupCtx) -> tuple[Perm, ...]:
    """Enumerate a finite Perm context from its generators."""
    if ctx.family != "perm":
        raise NotFiniteFamily(f"cannot enumerate family {ctx.family!r}")
    return _enumerate_perm_group(tuple(ctx.generators), ctx.n)


def normal_core(pair: HeckePair) -> list[Perm]:
    """Largest normal subgroup of G contained in H: L = {h : g^-1 h g in H
    for all g in G}.  Finite Perm family only; returns all elements of L."""
    if pair.ctx.family != "perm" or not isinstance(pair.subgroup, PermSubgroup):
        raise NotFiniteFamily("normal core requires the finite Perm family")
    g_all = group_elements(pair.ctx)
    h_set = set(subgroup_elements(pair))
    core = [
        h
        for h in sorted(h_set, key=sort_key)
        if all(elem_mul(elem_mul(elem_inv(g), h), g) in h_set for g in g_all)
    ]
    return core


@dataclass
class QuotientReduction:
    """The induced pair (G/L, H/L) realized as a Perm context on G/L,
    with the projection G -> G/L as a map on elements."""

    pair: HeckePair
    core: list[Perm]
    projection: dict  # source Perm -> image Perm on core-coset indices

    def project(self, g: Perm) -> Perm:
        return self.projection[g]


def quotient_pair(pair: HeckePair, core: list[Perm]) -> QuotientReduction:
    """Quotient reduction by the normal core L.

    G/L acts on its own coset space by left multiplication (the regular
    action), turning the induced pair into a finite Perm pair.  The
    canonical bijection G/H = (G/L)/(H/L) is realized by `project`.
    """
    if pair.ctx.family != "perm" or not isinstance(pair.subgroup, PermSubgroup):
        raise NotFiniteFamily("quotient reduction requires the finite Perm family")
    g_all = group_elements(pair.ctx)
    core_set = set(core)
    if not core_set:
        raise NotNormal("empty core")
    for g in pair.ctx.generators:
        conj = {elem_mul(elem_mul(elem_inv(g), h), g) for h in core_set}
        if conj != core_set:
            raise NotNormal(f"core is not normalized by {serialize(g)}")

    # partition G into cosets of L, ordered by their minimal element
    elem_to_class: dict[Perm, int] = {}
    class_keys = []
    classified = set()
    for g in g_all:
        if g in classified:
            continue
        members = sorted((elem_mul(g, h) for h in core_set), key=sort_key)
        classified.update(members)
        class_keys.append((sort_key(members[0]), members))
    class_keys.sort(key=lambda kv: kv[0])
    for idx, (_, members) in enumerate(class_keys):
        for e in members:
            elem_to_class[e] = idx
    q = len(class_keys)

    def image_of(g: Perm) -> Perm:
        reps = [class_keys[i][1][0] for i in range(q)]
        return Perm(tuple(elem_to_class[elem_mul(g, rep)] for rep in reps))

    projection = {g: image_of(g) for g in g_all}
    from .elements import perm_ctx

    new_ctx = perm_ctx(q, [projection[g] for g in pair.ctx.generators])
    h_gens = tuple(projection[h] for h in pair.subgroup.gens)
    new_pair = HeckePair(ctx=new_ctx, subgroup=PermSubgroup(gens=h_gens))
    return QuotientReduction(pair=new_pair, core=list(core), projection=projection)
