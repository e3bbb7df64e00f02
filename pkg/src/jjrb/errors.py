"""Exception hierarchy shared by every module of the package."""


class JJRBError(Exception):
    """Base class for all errors raised by jjrb."""


class DimensionMismatch(JJRBError, ValueError):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class ContainmentViolation(JJRBError, ValueError):
    pass


class AxiomViolation(JJRBError):
    """An input algebra or representation fails its defining identities."""


class NotRotaBaxter(AxiomViolation):
    pass


class NotAutomorphism(JJRBError):
    pass


class HypothesisNotMet(JJRBError):
    pass


class PrerequisiteFailed(JJRBError):
    pass


class MixedBase(JJRBError, ValueError):
    pass


class NonzeroWeight(JJRBError, ValueError):
    pass


class UnsupportedDegree(JJRBError, ValueError):
    pass


class ExcludedParameters(JJRBError, ValueError):
    pass


class UnknownId(JJRBError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(JJRBError, ValueError):
    pass


class MissingSection(ParseError):
    pass
