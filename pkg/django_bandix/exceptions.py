from django.core.exceptions import ValidationError

from django_bandix.constants import (
    ERROR_DISCONNECTED_DIAGRAM,
    ERROR_INTERNAL,
    ERROR_INVALID_INPUT,
    ERROR_MESSAGES,
    ERROR_NEGATIVE_GENUS,
    ERROR_NOT_BIPARTITE,
    ERROR_NOT_CONNECTED,
    ERROR_NOT_REPRESENTABLE,
    ERROR_ODD_PARAM,
    ERROR_PARITY,
    ERROR_RANGE,
    ERROR_SELF_LOOP,
    ERROR_SYNTAX,
    ERROR_UNCOVERED_CASE,
    ERROR_ZERO_PARAM,
)

_MESSAGES = dict(ERROR_MESSAGES)


class BandixValidationError(ValidationError):
    """
    Base of every input error. ``code`` is stable and machine readable.
    """
    default_code = ERROR_INVALID_INPUT

    def __init__(self, message=None, code=None, params=None):
        code = code or self.default_code
        if message is None:
            message = _MESSAGES[code]
        super(BandixValidationError, self).__init__(message, code=code, params=params)


class BandixSyntaxError(BandixValidationError):
    default_code = ERROR_SYNTAX


class BraidSyntaxError(BandixSyntaxError):
    pass


class GraphSyntaxError(BandixSyntaxError):
    pass


class PretzelSyntaxError(BandixSyntaxError):
    pass


class RangeError(BandixValidationError):
    default_code = ERROR_RANGE


class DisconnectedDiagram(BandixValidationError):
    default_code = ERROR_DISCONNECTED_DIAGRAM


class SelfLoopError(BandixValidationError):
    default_code = ERROR_SELF_LOOP


class NotConnected(BandixValidationError):
    default_code = ERROR_NOT_CONNECTED


class NotBipartite(BandixValidationError):
    default_code = ERROR_NOT_BIPARTITE


class ParityError(BandixValidationError):
    default_code = ERROR_PARITY


class NegativeGenus(BandixValidationError):
    default_code = ERROR_NEGATIVE_GENUS


class ZeroParam(BandixValidationError):
    default_code = ERROR_ZERO_PARAM


class OddParam(BandixValidationError):
    default_code = ERROR_ODD_PARAM


class UncoveredCase(BandixValidationError):
    default_code = ERROR_UNCOVERED_CASE


class InvalidInput(BandixValidationError):
    default_code = ERROR_INVALID_INPUT


class InternalInconsistency(Exception):
    """
    An invariant that holds for every valid input was broken.
    """
    code = ERROR_INTERNAL


class NotRepresentable(InternalInconsistency):
    code = ERROR_NOT_REPRESENTABLE
