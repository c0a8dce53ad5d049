"""Exception types shared across the package."""


class CosetMetricError(Exception):
    """Base class for all package errors."""


class FamilyMismatch(CosetMetricError):
    """Elements from different group families (or incompatible parameters)."""


class MalformedInput(CosetMetricError):
    """Syntactically invalid raw element or serialization."""


class SingularMatrix(CosetMetricError):
    """Matrix violates the nonzero-determinant / det constraint."""


class OutOfDomain(CosetMetricError):
    """Point not in the G-set's domain."""


class MissingSubgroupGenerators(CosetMetricError):
    """Subgroup variant has no effective generating set."""


class OrbitNotFinite(CosetMetricError):
    """Orbit enumeration exceeded its budget.

    Carries the divergence trace in `result`.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NotFiniteFamily(CosetMetricError):
    """Operation requires the finite permutation family."""


class NotNormal(CosetMetricError):
    """Claimed normal subgroup failed the normality re-check."""


class NotLocallyFinite(CosetMetricError):
    """Invariant graph construction refused: a degree enumeration diverged.

    `offender` names the generator or point whose neighbourhood blew up;
    `trace` carries the budget-exceeded orbit result when available.
    """

    def __init__(self, message, offender=None, trace=None):
        super().__init__(message)
        self.offender = offender
        self.trace = trace


class BudgetExceeded(CosetMetricError):
    """Enumeration budget exhausted."""

    def __init__(self, message, visited=None):
        super().__init__(message)
        self.visited = visited


class SubgroupNotFinite(CosetMetricError):
    """Hausdorff coset metric requires a finite (enumerable) subgroup."""


class NotBijectiveGenerator(CosetMetricError):
    """A finite-action generator image is not a bijection."""


class NotHomomorphism(CosetMetricError):
    """Generator images do not extend to a group homomorphism."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotBijectiveOnCosets(CosetMetricError):
    """The induced coset map fails one of the bijectivity conditions.

    `condition` names the failed condition: "preimage" (H != phi^-1(H'))
    or "surjective" (G' != phi(G) H').
    """

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class Disconnected(CosetMetricError):
    """A sampled point is unreachable in the constructed graph."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConfigError(CosetMetricError):
    """Experiment config failed to parse or validate."""
