"""Exception types raised across the package.

Everything derives from :class:`EntireTrainError`. Input-constraint violations
are also :class:`ValueError` subclasses so callers that only care about "bad
input" can catch that.
"""


class EntireTrainError(Exception):
    """Base class for all package errors."""


class ValidationError(EntireTrainError, ValueError):
    """A named input constraint was violated."""


class ParseError(EntireTrainError):
    """A scenario document could not be parsed.

    ``locus`` is either ``"line L, column C"`` for syntax errors or a dotted
    field path such as ``shipments[0].demand.q_car``.
    """

    def __init__(self, message, locus=None):
        self.locus = locus
        super().__init__(f"{locus}: {message}" if locus else message)


class ScenarioIOError(EntireTrainError, OSError):
    """Reading or writing a scenario, report, or CSV file failed."""


# network
class DuplicateNodeId(ValidationError):
    pass


class DanglingLinkEndpoint(ValidationError):
    pass


class NonPositiveLength(ValidationError):
    pass


class UnknownNode(ValidationError):
    pass


class ChainNotOnRoute(ValidationError):
    pass


class Unreachable(EntireTrainError):
    """No path connects the requested origin and destination."""


# inventory
class InvalidProfile(ValidationError):
    pass


class NonIntegerInterval(ValidationError):
    pass


class InvalidHorizon(ValidationError):
    pass


# railcost / tariff
class UnknownYard(ValidationError):
    pass


class UnknownCategory(ValidationError):
    pass


class NegativeInput(ValidationError):
    pass


# tradeoff
class BetaOutOfRange(ValidationError):
    pass


class EmptyPortfolio(ValidationError):
    pass


class UnsortedGrid(ValidationError):
    pass


class BadRange(ValidationError):
    pass
