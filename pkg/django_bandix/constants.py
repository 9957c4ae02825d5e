from django.conf import settings
from django.utils.translation import gettext_lazy as _

ERROR_SYNTAX = 'syntax'
ERROR_RANGE = 'range'
ERROR_DISCONNECTED_DIAGRAM = 'disconnected_diagram'
ERROR_SELF_LOOP = 'self_loop'
ERROR_NOT_CONNECTED = 'not_connected'
ERROR_NOT_BIPARTITE = 'not_bipartite'
ERROR_PARITY = 'parity'
ERROR_NEGATIVE_GENUS = 'negative_genus'
ERROR_ZERO_PARAM = 'zero_param'
ERROR_ODD_PARAM = 'odd_param'
ERROR_UNCOVERED_CASE = 'uncovered_case'
ERROR_INVALID_INPUT = 'invalid_input'
ERROR_NOT_REPRESENTABLE = 'not_representable'
ERROR_INTERNAL = 'internal_inconsistency'

ERROR_MESSAGES = (
    (ERROR_SYNTAX, _('Malformed input')),
    (ERROR_RANGE, _('Value out of range')),
    (ERROR_DISCONNECTED_DIAGRAM, _('Generator never occurs, the closed braid diagram is split')),
    (ERROR_SELF_LOOP, _('An edge must join two distinct Seifert circles')),
    (ERROR_NOT_CONNECTED, _('Graph is not connected')),
    (ERROR_NOT_BIPARTITE, _('Graph is not bipartite')),
    (ERROR_PARITY, _('Component count is incompatible with the surface parity')),
    (ERROR_NEGATIVE_GENUS, _('Component count gives a negative canonical genus')),
    (ERROR_ZERO_PARAM, _('Pretzel parameters must be nonzero')),
    (ERROR_ODD_PARAM, _('Pretzel parameters are not supported by this pipeline')),
    (ERROR_UNCOVERED_CASE, _('No closed formula covers this pretzel')),
    (ERROR_INVALID_INPUT, _('Invalid input')),
    (ERROR_NOT_REPRESENTABLE, _('Polynomial is not representable in z')),
    (ERROR_INTERNAL, _('Internal inconsistency')),
)

# Exit status of the bandix command
EXIT_INVALID_INPUT = 1
EXIT_INCONSISTENCY = 2

KIND_LOWER = 'lower'
KIND_UPPER = 'upper'

QUANTITY_BAND = 'B'
QUANTITY_FLAT = 'FB'

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'
FORMATS = (FORMAT_TEXT, FORMAT_JSON)

DEFAULT_SPANNING_TREE_BUDGET = 10000
DEFAULT_HILL_CLIMB_ROUNDS = 64
DEFAULT_THETA_NEGATIVE_SIGNS = True
DEFAULT_FORMAT = FORMAT_TEXT

# Start signs in tie-break order
START_SIGNS = (-1, 1)


def _setting(name, default):
    if settings.configured and hasattr(settings, name):
        return getattr(settings, name)
    return default


def spanning_tree_budget():
    return int(_setting('BANDIX_SPANNING_TREE_BUDGET', DEFAULT_SPANNING_TREE_BUDGET))


def hill_climb_rounds():
    return int(_setting('BANDIX_HILL_CLIMB_ROUNDS', DEFAULT_HILL_CLIMB_ROUNDS))


def theta_negative_signs():
    return bool(_setting('BANDIX_THETA_NEGATIVE_SIGNS', DEFAULT_THETA_NEGATIVE_SIGNS))


def default_format():
    return _setting('BANDIX_DEFAULT_FORMAT', DEFAULT_FORMAT)
