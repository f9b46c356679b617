"""Exception types shared across the package."""


class IndmatchError(Exception):
    """Base class for all errors raised by this package."""


class GraphConstructionError(IndmatchError, ValueError):
    """Invalid input while building a graph."""


class OutOfRangeVertex(GraphConstructionError):
    pass


class LoopEdge(GraphConstructionError):
    pass


class DuplicateEdge(GraphConstructionError):
    pass


class NonDisjointSets(IndmatchError, ValueError):
    pass


class InvalidEdgeId(IndmatchError, ValueError):
    pass


class EdgeNotInMatching(IndmatchError, ValueError):
    pass


class NotInducedMatching(IndmatchError, ValueError):
    pass


class GeneratorError(IndmatchError, ValueError):
    """Invalid parameters or sampling failure in a graph generator."""


class ParityError(GeneratorError):
    pass


class DegreeTooLarge(GeneratorError):
    pass


class RetriesExhausted(GeneratorError):
    """Rejection sampling ran out of attempts; message reports the rate."""


class UnknownName(GeneratorError):
    pass


class TooLarge(IndmatchError, ValueError):
    """Instance exceeds the hard size limit of a brute-force routine."""
