"""Exception hierarchy shared by every module of the package."""


class DedekindError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DedekindError):
    """Operands belong to different value groups or valued fields."""


class ParseError(DedekindError, ValueError):
    """Malformed descriptor, element, or polynomial text."""


class PreconditionError(DedekindError):
    """An operation was called outside its stated contract."""


class NotAUnit(PreconditionError):
    """Residue requested for an element whose valuation is not zero."""


class NotIntegral(PreconditionError):
    """A coefficient lies outside the valuation ring."""


class NotMonic(PreconditionError):
    pass


class InseparableInput(PreconditionError):
    pass


class IrreducibilityUncertified(PreconditionError):
    """Strict mode refused an input with no irreducibility certificate."""


class NoMinimum(PreconditionError):
    """The positive part of the value group has no minimum element."""


class GcdNotOne(PreconditionError):
    pass


class ValueNotMultipleOfSigma(PreconditionError):
    pass


class NoUniformizerAtValue(PreconditionError):
    """No representable field element realizes the requested value.

    Cannot occur for the four built-in valued fields; kept for
    descriptors added later.
    """


class DegreeCapExceeded(DedekindError):
    """Polynomial degree above the configured cap (see poly.set_degree_cap)."""
