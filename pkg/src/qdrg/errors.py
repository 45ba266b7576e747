"""Exception hierarchy shared by every module."""


class QDRGError(Exception):
    """Base class for all errors raised by qdrg."""


# --- intersection arrays -------------------------------------------------

class InvalidArray(QDRGError, ValueError):
    """The lists do not describe a valid intersection array."""


class C1NotOne(InvalidArray):
    pass


class NegativeAi(InvalidArray):
    pass


class NonIntegralKi(InvalidArray):
    pass


# --- spectra -------------------------------------------------------------

class TerminalIdentityFails(QDRGError, ValueError):
    """theta does not satisfy the last cosine relation, so it is not an eigenvalue."""


class IrrationalEigenvalue(QDRGError):
    pass


class DiameterTooLargeForSearch(QDRGError):
    pass


# --- theorem -------------------------------------------------------------

class NotQPolynomialAtTheta(QDRGError):
    pass


class InternalInconsistency(QDRGError):
    """Verdicts that must agree did not. Always a bug or a bad input certificate."""


class DiameterOutOfRange(QDRGError, ValueError):
    pass


# --- graphs --------------------------------------------------------------

class GraphFormatError(QDRGError, ValueError):
    pass


class Disconnected(GraphFormatError):
    pass


class SelfLoop(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class BadIndex(GraphFormatError):
    pass


class NotDistanceRegular(QDRGError):
    def __init__(self, x, y, i, kind, expected, found):
        self.x, self.y, self.i = x, y, i
        self.kind, self.expected, self.found = kind, expected, found
        super().__init__(
            f"pair ({x}, {y}) at distance {i}: {kind}_{i} = {found}, expected {expected}"
        )


class IdempotencyFailed(QDRGError):
    pass


class NoTriangles(QDRGError):
    pass


# --- constructions -------------------------------------------------------

class DiameterUnsupported(QDRGError, ValueError):
    pass


class CodeVerificationFailed(QDRGError):
    pass
