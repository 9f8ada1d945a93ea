"""WWLab core modules — q-series engine, coloured partitions, recurrences, closed forms, bijection."""


class WWLabError(Exception):
    """Root of every error raised by the wwlab engine."""


class TruncationMismatch(WWLabError):
    """Binary operation on two series truncated at different orders."""


class NotAUnit(WWLabError):
    """Division by a series whose constant term is not exactly 1."""


class NegativeQExponent(WWLabError):
    """A substitution or shift would produce a negative power of q."""


class UnknownColour(WWLabError):
    """A colour outside the alphabet in use."""


class PartitionSyntaxError(WWLabError):
    """Text that does not parse under the partition grammar."""


class SubstitutionSyntaxError(WWLabError):
    """A `VAR=EXPR` substitution that does not parse."""


class MembershipError(WWLabError):
    """A partition handed to an operation lies outside its family."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class StagePostconditionError(WWLabError):
    """A bijection step produced a partition that fails its stage check."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class UnknownTheorem(WWLabError, KeyError):
    """Lookup of a theorem id that is not registered."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown theorem"
