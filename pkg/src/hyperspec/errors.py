"""Exception types. Names match the error identifiers printed by the CLI."""


class HypergraphError(ValueError):
    """Base class for invalid input or violated hypotheses."""


class EdgeWrongSize(HypergraphError):
    pass


class DuplicateVertexInEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class RankTooSmall(HypergraphError):
    pass


class RankExceedsOrder(HypergraphError):
    pass


class IsolatedVertexPresent(HypergraphError):
    pass


class NoEdges(HypergraphError):
    pass


class EmptySelection(HypergraphError):
    pass


class DimensionMismatch(HypergraphError):
    pass


class NotUnitVector(HypergraphError):
    pass


class NonPositiveScale(HypergraphError):
    pass


class InstanceTooLarge(HypergraphError):
    pass


class ParameterOrder(HypergraphError):
    pass


class BadParams(HypergraphError):
    pass


class UnknownFixture(HypergraphError):
    pass


class ParseError(HypergraphError):
    pass


class ComputationOverflow(ArithmeticError):
    """A degree product no longer fits in a double."""


class NumericalError(RuntimeError):
    pass


class NonPositiveIterate(NumericalError):
    """An iterate hit zero; usually means the operator is reducible."""


class NotConverged(NumericalError):
    """Power iteration hit ``max_iter``; the partial estimate is attached."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
