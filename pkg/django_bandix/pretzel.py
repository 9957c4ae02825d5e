"""
Pretzel links L(p_1, ..., p_n): closed formula for one even parameter, theta graphs
for all even parameters and component counting of the standard diagram.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx
from django.utils.translation import gettext_lazy as _

from django_bandix.constants import theta_negative_signs
from django_bandix.exceptions import InternalInconsistency, InvalidInput, OddParam, UncoveredCase, ZeroParam
from django_bandix.grammar import split_tokens
from django_bandix.seifertgraph import SignedMultigraph
from django_bandix.validators import pretzel_validator

logger = logging.getLogger(__name__)

CASE_ODD = 'n odd, alpha != 0: delta + 2'
CASE_EVEN_ALPHA_ZERO = 'n even, alpha = 0: delta'
CASE_EVEN_UNBALANCED = 'n even, alpha + b != 0: |p1| + delta'
CASE_EVEN_BALANCED = 'n even, alpha + b = 0: |p1| + delta - 2'


def _sign(value):
    return 1 if value > 0 else -1


@dataclass(frozen=True)
class PretzelSpec(object):
    params: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'params', tuple(int(p) for p in self.params))
        if len(self.params) < 2:
            raise InvalidInput(_('A pretzel needs at least two parameters'))
        if any(p == 0 for p in self.params):
            raise ZeroParam()

    @property
    def n(self):
        return len(self.params)

    def __str__(self):
        return 'L({})'.format(','.join(str(p) for p in self.params))

    def rotate(self, offset=1):
        offset %= self.n
        return PretzelSpec(self.params[offset:] + self.params[:offset])

    def even_positions(self):
        return [k for k, p in enumerate(self.params) if p % 2 == 0]

    def is_all_even(self):
        return len(self.even_positions()) == self.n


@dataclass(frozen=True)
class CorollaryInput(object):
    """
    Pretzel knot K(p1, o_2, ..., o_n) with exactly one even parameter, placed first.
    """
    p1: int
    odds: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'odds', tuple(int(o) for o in self.odds))
        if self.p1 % 2 or abs(self.p1) < 2:
            raise OddParam(_('p1 = %(p1)s must be even with |p1| >= 2'), params={'p1': self.p1})
        if not self.odds:
            raise InvalidInput(_('At least one odd parameter is required'))
        for odd in self.odds:
            if odd % 2 == 0 or abs(odd) < 3:
                raise OddParam(_('%(odd)s must be odd with magnitude at least 3'), params={'odd': odd})

    @property
    def n(self):
        return 1 + len(self.odds)

    @property
    def alpha(self):
        return sum(_sign(o) for o in self.odds)

    @property
    def b(self):
        return _sign(self.p1)

    @property
    def delta(self):
        return sum(abs(o) - 1 for o in self.odds)


def parse_pretzel(text):
    """
    :rtype: PretzelSpec
    """
    pretzel_validator(text)
    return PretzelSpec(int(token) for token in split_tokens(text))


def corollary_input(spec):
    """
    Rotate the single even parameter first.
    :rtype: CorollaryInput
    """
    evens = spec.even_positions()
    if len(evens) != 1:
        raise OddParam(_('%(spec)s has %(count)s even parameters, the closed formula needs exactly one'),
                       params={'spec': str(spec), 'count': len(evens)})
    rotated = spec.rotate(evens[0])
    return CorollaryInput(rotated.params[0], rotated.params[1:])


def corollary_band_index(c):
    """
    :rtype: tuple[int, str]
    """
    if c.n % 2:
        if c.alpha == 0:
            raise UncoveredCase(_('n = %(n)s is odd and alpha = 0'), params={'n': c.n})
        value, case = c.delta + 2, CASE_ODD
    elif c.alpha == 0:
        value, case = c.delta, CASE_EVEN_ALPHA_ZERO
    elif c.alpha + c.b != 0:
        value, case = abs(c.p1) + c.delta, CASE_EVEN_UNBALANCED
    else:
        value, case = abs(c.p1) + c.delta - 2, CASE_EVEN_BALANCED
    if value % 2:
        raise InternalInconsistency('Band index %s of a pretzel knot is odd' % value)
    logger.debug('Pretzel band index %s (%s)', value, case)
    return value, case


def theta_graph(spec, negative_signs=None):
    """
    Two hubs joined by one path of |p_i| edges per parameter.

    :param negative_signs: positive parameters give "-" edges, defaults to BANDIX_THETA_NEGATIVE_SIGNS
    :rtype: SignedMultigraph
    """
    odd = [p for p in spec.params if p % 2]
    if odd:
        raise OddParam(_('Theta graphs need even parameters, got %(odd)s'),
                       params={'odd': ', '.join(map(str, odd))})
    if negative_signs is None:
        negative_signs = theta_negative_signs()
    edges = []
    vertex_count = 2
    for p in spec.params:
        sign = -_sign(p) if negative_signs else _sign(p)
        previous = 0
        for _step in range(abs(p) - 1):
            edges.append((previous, vertex_count, sign))
            previous = vertex_count
            vertex_count += 1
        edges.append((previous, 1, sign))
    return SignedMultigraph(vertex_count, edges)


def trace_components(spec):
    """
    Components of the standard diagram: each twist region is a tangle with corners
    TL, TR, BL, BR joined by the closing arcs.
    """
    diagram = nx.Graph()
    n = spec.n
    for i, p in enumerate(spec.params):
        if p % 2:
            diagram.add_edge(('TL', i), ('BR', i))
            diagram.add_edge(('TR', i), ('BL', i))
        else:
            diagram.add_edge(('TL', i), ('BL', i))
            diagram.add_edge(('TR', i), ('BR', i))
    for i in range(n - 1):
        diagram.add_edge(('TR', i), ('TL', i + 1))
        diagram.add_edge(('BR', i), ('BL', i + 1))
    diagram.add_edge(('TL', 0), ('TR', n - 1))
    diagram.add_edge(('BL', 0), ('BR', n - 1))
    return nx.number_connected_components(diagram)
