"""Exception types shared across the package."""


class NetworkError(ValueError):
    """A network specification violates its invariants."""


class IndexOutOfRange(NetworkError):
    pass


class DuplicateEdge(NetworkError):
    pass


class SelfCoupling(NetworkError):
    pass


class OverlappingSourceSink(NetworkError):
    pass


class InvalidSize(NetworkError):
    pass


class UnknownUnit(NetworkError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """Symmetry search refused: network larger than the configured site limit."""


class DimensionMismatch(ValueError):
    pass


class NonUniqueSteadyState(RuntimeError):
    """The generator has a null space of dimension > 1."""


class SolveFailure(RuntimeError):
    pass


class StepSizeUnderflow(RuntimeError):
    """The adaptive integrator could not meet the tolerance."""


class NonPhysicalState(RuntimeError):
    """A density matrix violates hermiticity, trace or positivity bounds."""


class GridTooCoarse(ValueError):
    pass


class MissingExternalData(FileNotFoundError):
    """A preset needs an externally supplied data file."""
