"""Exception hierarchy shared by all altlink modules."""


class AltlinkError(Exception):
    """Base class for every error raised by altlink."""


# algebra

class NotSymmetrizable(AltlinkError, ValueError):
    pass


class ZeroPolynomial(AltlinkError, ValueError):
    pass


# diagram

class DiagramError(AltlinkError, ValueError):
    """Raised for PD input that does not describe a valid link diagram."""


class PDSyntaxError(DiagramError):
    pass


class ArcMultiplicityError(DiagramError):
    pass


class DisconnectedDiagram(DiagramError):
    pass


class EmptyDiagram(DiagramError):
    pass


class OrientationInconsistency(DiagramError):
    pass


class EmbeddingError(DiagramError):
    pass


class ColoringError(DiagramError):
    pass


class UnknownEdge(DiagramError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


# states / ata / analysis

class GradingNotInteger(AltlinkError, ValueError):
    pass


class NotAlternative(AltlinkError, ValueError):
    pass


class ATAInternalError(AltlinkError, RuntimeError):
    pass


class InconsistentCensus(AltlinkError, RuntimeError):
    pass


class DegenerateMatrix(AltlinkError, ValueError):
    pass


class ParityError(AltlinkError, ValueError):
    pass


# cli

class SchemaError(AltlinkError, ValueError):
    pass
