from django.utils.deconstruct import deconstructible
from django.utils.encoding import force_str
from django.utils.translation import gettext_lazy as _

from django_bandix.exceptions import (
    BraidSyntaxError,
    GraphSyntaxError,
    PretzelSyntaxError,
    RangeError,
    SelfLoopError,
    ZeroParam,
)
from django_bandix.grammar import (
    GRAPH_EDGE_RE,
    GRAPH_VERTICES_RE,
    INTEGER_RE,
    content_lines,
    split_tokens,
)


@deconstructible
class SignedIntegerListValidator(object):
    messages = {
        'token': _('"%(token)s" is not an integer'),
        'zero': _('Zero is not allowed'),
        'count': _('At least %(count)s values are required'),
    }
    syntax_error = BraidSyntaxError
    zero_error = BraidSyntaxError
    min_count = 0

    def __init__(self, min_count=None):
        if min_count is not None:
            self.min_count = int(min_count)

    def __call__(self, value):
        """
        Validates a comma or whitespace separated list of nonzero integers, otherwise raises ValidationError.
        """
        tokens = split_tokens(force_str(value))
        for token in tokens:
            if not INTEGER_RE.match(token):
                raise self.syntax_error(self.messages['token'], params={'token': token})
            if int(token) == 0:
                raise self.zero_error(self.messages['zero'])
        if len(tokens) < self.min_count:
            raise self.syntax_error(self.messages['count'], params={'count': self.min_count})

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.min_count == other.min_count


@deconstructible
class BraidWordValidator(SignedIntegerListValidator):
    messages = dict(SignedIntegerListValidator.messages, zero=_('0 is not a braid generator'))


braid_word_validator = BraidWordValidator()


@deconstructible
class PretzelValidator(SignedIntegerListValidator):
    syntax_error = PretzelSyntaxError
    zero_error = ZeroParam
    min_count = 2


pretzel_validator = PretzelValidator()


@deconstructible
class GraphFileValidator(object):
    messages = {
        'header': _('Line %(line)s: expected "vertices <N>"'),
        'edge': _('Line %(line)s: expected "edge <u> <v> <+|->"'),
        'empty': _('Missing "vertices <N>" line'),
        'count': _('Vertex count must be positive'),
        'range': _('Line %(line)s: vertex %(vertex)s not in [0, %(count)s)'),
        'loop': _('Line %(line)s: self-loop at vertex %(vertex)s'),
    }

    def __call__(self, value):
        """
        Validates the graph file grammar, vertex ranges and the absence of self-loops.
        """
        count = None
        for number, line in content_lines(force_str(value)):
            if count is None:
                found = GRAPH_VERTICES_RE.match(line)
                if found:
                    count = int(found.group('count'))
                    if count < 1:
                        raise RangeError(self.messages['count'])
                    continue
            found = GRAPH_EDGE_RE.match(line)
            if not found:
                key = 'header' if count is None else 'edge'
                raise GraphSyntaxError(self.messages[key], params={'line': number})
            u, v = int(found.group('u')), int(found.group('v'))
            if u == v:
                raise SelfLoopError(self.messages['loop'], params={'line': number, 'vertex': u})
            if count is None:
                raise GraphSyntaxError(self.messages['header'], params={'line': number})
            for vertex in (u, v):
                if vertex >= count:
                    raise RangeError(self.messages['range'],
                                     params={'line': number, 'vertex': vertex, 'count': count})
        if count is None:
            raise GraphSyntaxError(self.messages['empty'])


graph_file_validator = GraphFileValidator()
