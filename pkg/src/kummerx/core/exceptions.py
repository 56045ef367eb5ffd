"""
Exception hierarchy for kummerx.

Library code raises these; only the CLI converts them to process exit codes.
"""


class KummerxError(Exception):
    """Base class for all kummerx errors."""
    exit_code = 2


class InvalidInputError(KummerxError):
    """An argument is outside the accepted input set (not an odd prime, bad class...)."""
    exit_code = 2


class ConfigurationError(KummerxError):
    """Configuration validation or loading error."""
    exit_code = 2


class DomainError(KummerxError):
    """A formula was evaluated outside the domain where it is defined."""
    exit_code = 2


class PoleError(DomainError):
    """Hurwitz zeta requested at its pole s = 1."""


class PrecisionExhaustedError(KummerxError):
    """A certified result could not be produced at the available precision."""
    exit_code = 3


class CannotDivideError(PrecisionExhaustedError):
    """An enclosure that has to exclude zero contains zero."""


class UndeterminedSignError(PrecisionExhaustedError):
    """The sign of an enclosure could not be decided at the precision cap."""


class CertificationError(PrecisionExhaustedError):
    """An exact integer could not be extracted from a ball enclosure."""


class InternalError(KummerxError):
    """An exact-arithmetic invariant was violated. Indicates a bug."""
    exit_code = 3
