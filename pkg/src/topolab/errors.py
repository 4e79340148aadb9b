"""Exception hierarchy shared by every topolab module."""


class TopolabError(ValueError):
    """Base class for domain errors raised by the library."""


class GroundSizeOutOfRange(TopolabError):
    pass


class MissingEmptyOrFull(TopolabError):
    pass


class NotClosed(TopolabError):
    """Raised when a family of sets is not closed under union or intersection."""

    def __init__(self, u: int, v: int, op: str):
        self.u, self.v, self.op = u, v, op
        super().__init__(f"{op} of {u:#b} and {v:#b} is not in the family")


class MaskOutOfRange(TopolabError):
    pass


class BlocksNotAPartition(TopolabError):
    pass


class InvalidPermutation(TopolabError):
    pass


class InvalidPartitionType(TopolabError):
    pass


class DegreeTooSmall(TopolabError):
    pass


class ZeroPolynomial(TopolabError):
    pass


class IndexOutOfRange(TopolabError):
    pass


class StrategyOutOfRange(TopolabError):
    pass


class UnknownFamily(TopolabError):
    pass


class ParamOutOfRange(TopolabError):
    pass


class UnknownTheorem(TopolabError):
    pass
