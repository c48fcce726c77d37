"""Exception hierarchy.

Every mathematically meaningful failure mode has its own class so that
callers (and the CLI) can report failures by name.  The base class keeps
an optional ``details`` payload for structured reporting.
"""


class Level3Error(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message="", details=None):
        super().__init__(message)
        self.details = details

    @property
    def name(self):
        return type(self).__name__


# -- exact ring layer -------------------------------------------------------

class ZeroInput(Level3Error):
    """An operation that requires a nonzero input received zero."""


class NotAUnit(Level3Error):
    """Inversion was requested for a non-invertible ring element."""


class NonUnitConstantTerm(Level3Error):
    """Power series inversion needs an invertible constant term."""


class NonzeroInnerConstant(Level3Error):
    """Series composition needs an inner series vanishing at 0."""


class NonUnitDenominator(Level3Error):
    """A division appeared whose denominator is not a unit of the ring."""


# -- base scheme / automorphisms --------------------------------------------

class NoConsistentPermutation(Level3Error):
    """The valuation data of a base automorphism fits no permutation."""


class ClosureExceeded(Level3Error):
    """Group closure grew past its proven bound (internal inconsistency)."""


class NoMatchingTorsionPoint(Level3Error):
    """No torsion section matches the transported one (convention bug)."""


# -- curves and points -------------------------------------------------------

class NonUnitDiscriminant(Level3Error):
    """j-invariant requested for a curve whose discriminant is not a unit."""


class NotEverywhereDistinct(Level3Error):
    """No unit-ideal certificate separates the two sections."""


class ZeroVector(Level3Error):
    """The zero vector has no slope entry."""


class InflectionFailure(Level3Error):
    """A claimed inflection point fails the order-3 tangency test."""


# -- fibres and formal groups -------------------------------------------------

class PrecisionTooLow(Level3Error):
    """The requested series precision cannot support the computation."""


class HeightMismatch(Level3Error):
    """The [2]-series does not match any recognised formal-group height."""


class SingularFiber(Level3Error):
    """A specialisation landed on the singular locus (nu^3 = 1)."""


class NoWitnessFound(Level3Error):
    """No ordinary fibre was found in the search range."""


class Mismatch(Level3Error):
    """Two independent computations of the same quantity disagree."""


# -- pairing and classification ----------------------------------------------

class DivisorMismatch(Level3Error):
    """A divisor certificate failed; carries the residual polynomial."""


class NotOrderThree(Level3Error):
    """The marked point is not a 3-torsion inflection point."""


class SlopeDifferenceNotInvertible(Level3Error):
    """Tangent-slope data degenerate: the two marked points are dependent."""


class CanonicalFormMismatch(Level3Error):
    """Normalisation did not land on the canonical a3 = nu^3 - 1 form."""


class NoCubeRootMatch(Level3Error):
    """Neither primitive cube root of unity matches the second point."""


# -- CLI input ----------------------------------------------------------------

class LiteralSyntaxError(Level3Error):
    """An exact-literal string failed to parse; message carries position."""


class InputDocError(Level3Error):
    """A curve input document is malformed or fails its invariants."""
