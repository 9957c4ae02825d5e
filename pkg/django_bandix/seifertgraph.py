"""
Induced graphs of canonical Seifert surfaces.

Vertices are Seifert circles and every crossing is a signed edge joining two of them.
Edges keep their input order, the position of an edge is its id.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx
from django.utils.translation import gettext_lazy as _

from django_bandix.exceptions import (
    DisconnectedDiagram,
    NegativeGenus,
    NotConnected,
    ParityError,
    RangeError,
    SelfLoopError,
)
from django_bandix.grammar import (
    GRAPH_EDGE_RE,
    GRAPH_VERTICES_RE,
    SIGN_CHARS,
    SIGN_VALUES,
    content_lines,
)
from django_bandix.validators import graph_file_validator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedEdge(object):
    u: int
    v: int
    sign: int


@dataclass(frozen=True)
class SignedMultigraph(object):
    vertex_count: int
    edges: tuple = field(default=())

    def __post_init__(self):
        edges = tuple(e if isinstance(e, SignedEdge) else SignedEdge(*e) for e in self.edges)
        object.__setattr__(self, 'edges', edges)
        if self.vertex_count < 1:
            raise RangeError(_('A graph needs at least one vertex'))
        for edge in edges:
            for vertex in (edge.u, edge.v):
                if not 0 <= vertex < self.vertex_count:
                    raise RangeError(_('Vertex %(vertex)s not in [0, %(count)s)'),
                                     params={'vertex': vertex, 'count': self.vertex_count})
            if edge.u == edge.v:
                raise SelfLoopError()
            if edge.sign not in (1, -1):
                raise RangeError(_('Edge sign must be +1 or -1'))

    @property
    def s(self):
        return self.vertex_count

    @property
    def c(self):
        return len(self.edges)

    @property
    def cycle_rank(self):
        return self.c - self.s + 1

    def to_networkx(self):
        """
        MultiGraph keyed by edge id, each edge carrying its ``sign``.
        :rtype: nx.MultiGraph
        """
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for eid, edge in enumerate(self.edges):
            graph.add_edge(edge.u, edge.v, key=eid, sign=edge.sign)
        return graph

    def is_connected(self):
        return nx.is_connected(self.to_networkx())

    def require_connected(self):
        if not self.is_connected():
            raise NotConnected()


@dataclass(frozen=True)
class EulerData(object):
    s: int
    c: int
    l: int
    canonical_genus: int


def graph_from_braid(w):
    """
    One vertex per strand and one edge ``(i - 1, i, sign(e))`` per letter ``e`` with ``|e| = i``.
    :rtype: SignedMultigraph
    """
    missing = w.missing_generators()
    if missing:
        raise DisconnectedDiagram(_('Generators %(missing)s never occur'),
                                  params={'missing': ', '.join(map(str, missing))})
    edges = [(abs(e) - 1, abs(e), 1 if e > 0 else -1) for e in w.letters]
    return SignedMultigraph(w.strands, edges)


def graph_from_file(text):
    graph_file_validator(text)
    count = None
    edges = []
    for _number, line in content_lines(text):
        if count is None:
            count = int(GRAPH_VERTICES_RE.match(line).group('count'))
            continue
        found = GRAPH_EDGE_RE.match(line)
        edges.append((int(found.group('u')), int(found.group('v')), SIGN_VALUES[found.group('sign')]))
    graph = SignedMultigraph(count, edges)
    if graph.is_connected():
        logger.debug('Graph file: %s vertices, %s edges, connected', graph.s, graph.c)
    else:
        logger.warning('Graph file: %s vertices, %s edges, not connected', graph.s, graph.c)
    return graph


def render_graph(g):
    lines = ['vertices {}'.format(g.vertex_count)]
    for edge in g.edges:
        lines.append('edge {} {} {}'.format(edge.u, edge.v, SIGN_CHARS[edge.sign]))
    return '\n'.join(lines) + '\n'


def is_bipartite(g):
    """
    :return: ``(True, coloring)`` with colors 0/1 per vertex, or ``(False, None)``
    """
    g.require_connected()
    graph = g.to_networkx()
    if not nx.is_bipartite(graph):
        return False, None
    coloring = nx.bipartite.color(graph)
    if coloring[0] != 0:
        coloring = {vertex: 1 - color for vertex, color in coloring.items()}
    return True, dict(sorted(coloring.items()))


def euler_data(g, l):
    """
    Euler characteristic s - c = 2 - 2 g_c - l of the canonical surface.
    :rtype: EulerData
    """
    if l < 1:
        raise RangeError(_('A link has at least one component, got %(l)s'), params={'l': l})
    g.require_connected()
    doubled = g.c - g.s + 2 - l
    if doubled % 2:
        raise ParityError(_('c - s + 2 - l = %(value)s is odd'), params={'value': doubled})
    if doubled < 0:
        raise NegativeGenus(_('c - s + 2 - l = %(value)s is negative'), params={'value': doubled})
    return EulerData(s=g.s, c=g.c, l=l, canonical_genus=doubled // 2)
