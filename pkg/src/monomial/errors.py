"""Shared exception types.

Every refusal the library can produce is a subclass of MonomialError, so
callers (in particular the CLI) can distinguish "the math said no" from a
genuine bug.
"""


class MonomialError(Exception):
    """Base class for all structured refusals."""


# --- group-core ---------------------------------------------------------


class ParseError(MonomialError):
    """Group file (or other text payload) does not parse."""


class NotAGroup(MonomialError):
    """A group axiom failed; the message names the failing triple/element."""


class NotSolvable(MonomialError):
    """Derived series does not reach the trivial subgroup."""


class NotNormal(MonomialError):
    """Quotient requested by a non-normal subgroup."""


class NotASubgroup(MonomialError):
    """Subset is not a subgroup / not contained where required."""


# --- brauer-ring --------------------------------------------------------


class CNotAbelianNormal(MonomialError):
    """Projector requested for a subgroup that is not abelian normal."""


class NoSolution(MonomialError):
    """Integer system has no solution.  For Brauer presentations this
    signals a bug or a violated precondition, never expected behaviour."""


# --- type3 --------------------------------------------------------------


class NotMaximal(MonomialError):
    """H is not a maximal subgroup."""


class HNormal(MonomialError):
    """H is normal, so (G, H) is not a type-III configuration."""


class TooLarge(MonomialError):
    """Brute-force enumeration would exceed the configured cap."""


# --- extend-engine ------------------------------------------------------


class MissingValue(MonomialError):
    """A Delta function is undefined on a required pair class."""


class ConditionsViolated(MonomialError):
    """Extendibility refused; carries the violating relation/condition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# --- tame-arith ---------------------------------------------------------


class NotTame(MonomialError):
    """Character conductor would exceed 1 (wild ramification is out of scope)."""


class NotAbelianTameCase(MonomialError):
    """Extension is not one of the supported abelian tame shapes."""


class DegenerateCase(MonomialError):
    """ell divides q-1, so the Kummer case applies instead (use check_DH_I)."""


class UnsupportedModel(MonomialError):
    """galois_delta asked for a model outside the supported list."""
