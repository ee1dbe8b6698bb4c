"""Exception types shared across the package.

The CLI maps these onto exit codes: bad input (2), violated mathematical
precondition (3), violated internal certificate (4).
"""


class SympError(Exception):
    """Base class for all library errors."""


# -- ring layer ---------------------------------------------------------

class MixedRings(SympError):
    """Operands belong to different rings."""


class BadModulus(SympError):
    pass


class BadDescriptor(SympError):
    pass


class NilpotentLocalization(SympError):
    """The localization element is nilpotent, so R_a would collapse."""


class UnsupportedRing(SympError):
    """No decision procedure for this ring (ideal membership etc.)."""


class UndecidableUnit(SympError):
    """Unit test inconclusive.  Never raised for the built-in ring menu,
    whose constant-term/nilpotency analysis is complete; kept so callers
    over future ring kinds get an honest answer instead of a guess."""


# -- matrix layer -------------------------------------------------------

class ShapeMismatch(SympError):
    pass


class NotInvertible(SympError):
    pass


# -- alternating forms / bilinear forms ---------------------------------

class NotAlternating(SympError):
    pass


class OddSize(SympError):
    pass


class NoUnitPivot(SympError):
    """Symplectic reduction needs a unit pivot the ring did not supply."""


class PfaffianNotOne(SympError):
    pass


class NotIsometry(SympError):
    pass


class MixedSpaces(SympError):
    pass


# -- generator words ----------------------------------------------------

class DiagonalIndex(SympError):
    pass


class NonPolynomialArgument(SympError):
    pass


class IdealViolation(SympError):
    pass


class NoCertificate(SympError):
    pass


class ExpansionFailure(SympError):
    """The rewriting engine could not produce a certified flat word."""


# -- bordered generators ------------------------------------------------

class MembershipViolation(SympError):
    """A constructed matrix failed its own membership postcondition (bug)."""


class FormMismatch(SympError):
    pass


class DecompositionMismatch(SympError):
    pass


# -- patching -----------------------------------------------------------

class NotBasedAtIdentity(SympError):
    pass


class CertificateMismatch(SympError):
    pass


class NotComaximal(SympError):
    pass


class WeightsNotUnity(SympError):
    pass
