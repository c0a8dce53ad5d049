"""Proper invariant metrics on discrete coset spaces and countable G-sets.

Construct G-invariant, compatible, proper metrics on G/H when H is almost
normal (relative Cayley graphs, Hausdorff coset metrics, pullbacks), refuse
constructively when it is not, and verify everything with certificate-
carrying checks.
"""

__version__ = "1.0.0"

from .errors import (
    BudgetExceeded,
    ConfigError,
    CosetMetricError,
    Disconnected,
    FamilyMismatch,
    MalformedInput,
    NotBijectiveGenerator,
    NotBijectiveOnCosets,
    NotHomomorphism,
    NotLocallyFinite,
    NotNormal,
    OrbitNotFinite,
    SubgroupNotFinite,
)
from .elements import (
    Affine,
    BSWord,
    GroupCtx,
    Perm,
    RatMatrix,
    affine_ctx,
    bs_ctx,
    perm_ctx,
    serialize,
    sl_ctx,
)
from .cosets import (
    Coset,
    CyclicX,
    HeckePair,
    IntegerMatrices,
    IntegerTranslations,
    OrbitResult,
    PermSubgroup,
    PositiveDilations,
    coset,
    enumerate_cosets,
    h_orbit_of_coset,
    identity_coset,
    left_mul,
    normal_core,
    quotient_pair,
)
from .metrics import (
    HausdorffCosetMetric,
    OrbitPairsGraph,
    RelativeCayleyGraph,
    WordMetric,
    ball,
    build_orbit_pairs_graph,
    build_relative_cayley,
    export_dot,
    graph_distance,
    hausdorff_distance,
    pullback_metric,
)
from .closure import (
    FiniteAction,
    closure_finite,
    stabilizer_orbit_probe,
    truncated_closure_levels,
)
from .verify import (
    FAIL,
    PASS,
    SAMPLED,
    UNKNOWN,
    Certificate,
    Verdict,
    check_almost_normal,
    check_invariance,
    check_metric_axioms,
    check_properness,
    equivalence_harness,
    replay_counterexample,
)
