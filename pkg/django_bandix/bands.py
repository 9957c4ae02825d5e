"""
Spanning tree analysis of induced graphs.

A spanning tree T of the induced graph gives a banded surface with c - s + 1 bands.
Relabelling T with signs alternating in depth costs 4 flat bands per mismatched tree
edge (beta), and every non-tree band with nonzero framing costs 2 more (gamma).
"""
import logging
from dataclasses import dataclass, field

import networkx as nx
from django.utils.translation import gettext_lazy as _
from sympy import zeros

from django_bandix.constants import (
    KIND_LOWER,
    KIND_UPPER,
    QUANTITY_BAND,
    QUANTITY_FLAT,
    START_SIGNS,
    hill_climb_rounds,
    spanning_tree_budget,
)
from django_bandix.exceptions import InternalInconsistency, NotBipartite, RangeError
from django_bandix.seifertgraph import graph_from_braid, is_bipartite

logger = logging.getLogger(__name__)

SOURCE_CYCLE_RANK = 'B <= c(F) - s(F) + 1, cycle rank of the induced graph'
SOURCE_BRAID_LENGTH = 'B <= m, closed n-braid of length m + n - 1'
SOURCE_TREE_FLAT = 'FB <= c(S) - s(S) + 1 + 4 beta + 2 gamma, spanning tree {tree} root {root} start sign {sign}'
SOURCE_BRAID_FLAT = 'FB <= m + 2s, one disc letter per generator with cancelling pairs where needed'
SOURCE_COMPONENTS = 'B >= l - 1 and B = l + 1 (mod 2), boundary of a disc with n bands'
SOURCE_GENUS = 'B >= 2g + l - 1, genus lower bound {genus}'
SOURCE_CONWAY = 'B >= deg of the Conway polynomial = {degree}'


@dataclass(frozen=True)
class BoundWitness(object):
    kind: str
    quantity: str
    value: int
    source: str

    def __post_init__(self):
        if self.value < 0:
            raise RangeError(_('Bound value must be nonnegative'))

    def as_dict(self):
        return {'kind': self.kind, 'value': self.value, 'source': self.source}


@dataclass(frozen=True)
class SpanningTreeAnalysis(object):
    tree: frozenset
    root: int
    start_sign: int
    labeling: dict = field(compare=False)
    beta: int
    gamma: int
    framings: dict = field(compare=False)
    band_bound: int
    flat_bound: int


class TreeFrame(object):
    """
    Rooted spanning tree with parent links and depths, used for tree paths.
    """

    def __init__(self, g, tree, root):
        self.graph = g
        self.tree = frozenset(tree)
        self.root = root
        if len(self.tree) != g.vertex_count - 1:
            raise RangeError(_('A spanning tree of %(count)s vertices needs %(need)s edges, got %(size)s'),
                             params={'count': g.vertex_count, 'need': g.vertex_count - 1,
                                     'size': len(self.tree)})
        forest = nx.Graph()
        forest.add_nodes_from(range(g.vertex_count))
        for eid in sorted(self.tree):
            edge = g.edges[eid]
            forest.add_edge(edge.u, edge.v, eid=eid)
        if not nx.is_tree(forest):
            raise RangeError(_('Edges %(tree)s do not form a spanning tree'), params={'tree': sorted(self.tree)})
        self.depth = {root: 0}
        self.parent = {}
        for u, v in nx.bfs_edges(forest, root):
            self.depth[v] = self.depth[u] + 1
            self.parent[v] = (u, forest[u][v]['eid'])

    def path(self, u, v):
        """
        Edge ids of the tree path between ``u`` and ``v``.
        :rtype: list[int]
        """
        up, down = [], []
        while self.depth[u] > self.depth[v]:
            u, eid = self.parent[u]
            up.append(eid)
        while self.depth[v] > self.depth[u]:
            v, eid = self.parent[v]
            down.append(eid)
        while u != v:
            u, eid = self.parent[u]
            up.append(eid)
            v, eid = self.parent[v]
            down.append(eid)
        return up + down[::-1]

    def labeling(self, start_sign):
        labels = {}
        for vertex, (_parent, eid) in self.parent.items():
            labels[eid] = start_sign if self.depth[vertex] % 2 else -start_sign
        return dict(sorted(labels.items()))

    def non_tree_edges(self):
        return [eid for eid in range(len(self.graph.edges)) if eid not in self.tree]


def _require_bipartite(g):
    bipartite, _coloring = is_bipartite(g)
    if not bipartite:
        raise NotBipartite()


def band_upper_bound(g):
    g.require_connected()
    return BoundWitness(KIND_UPPER, QUANTITY_BAND, g.cycle_rank, SOURCE_CYCLE_RANK)


def spanning_tree(g, root=0):
    """
    Breadth first tree from ``root``; between parallel edges the lowest id wins.
    :rtype: frozenset[int]
    """
    g.require_connected()
    graph = g.to_networkx()
    return frozenset(min(graph[u][v]) for u, v in nx.bfs_edges(graph, root))


def alternating_labeling(g, tree, root, start_sign):
    """
    Label ``start_sign * (-1)^(d - 1)`` on the tree edge whose deeper end has depth ``d``.
    :rtype: dict[int, int]
    """
    return TreeFrame(g, tree, root).labeling(start_sign)


def _path_sign_sum(frame, labeling, eid):
    edge = frame.graph.edges[eid]
    total = sum(labeling[step] for step in frame.path(edge.u, edge.v))
    if total not in (1, -1):
        raise NotBipartite(_('Tree path of edge %(edge)s has sign sum %(total)s'),
                           params={'edge': eid, 'total': total})
    return total


def path_sign_sum(g, tree, labeling, eid):
    if eid in tree:
        raise RangeError(_('Edge %(edge)s is a tree edge'), params={'edge': eid})
    return _path_sign_sum(TreeFrame(g, tree, g.edges[eid].u), labeling, eid)


def beta_count(g, tree, labeling):
    return sum(1 for eid in tree if g.edges[eid].sign != labeling[eid])


def _gamma_count(frame, labeling):
    return sum(1 for eid in frame.non_tree_edges()
               if frame.graph.edges[eid].sign == _path_sign_sum(frame, labeling, eid))


def gamma_count(g, tree, labeling):
    return _gamma_count(TreeFrame(g, tree, 0), labeling)


def _framing(frame, eid, labeling=None):
    edge = frame.graph.edges[eid]
    path = frame.path(edge.u, edge.v)
    if labeling is None:
        k = sum(frame.graph.edges[step].sign for step in path)
    else:
        k = sum(labeling[step] for step in path)
    if (k + edge.sign) % 2:
        raise NotBipartite(_('Framing of edge %(edge)s is not an integer'), params={'edge': eid})
    return (k + edge.sign) // 2


def framing(g, tree, eid, use_actual_signs=True, labeling=None):
    """
    n_e = (k + sign(e)) / 2, with k the sign sum along the tree path of ``eid``.

    :param use_actual_signs: sum the edge signs, otherwise the ``labeling``
    """
    if not use_actual_signs and labeling is None:
        raise RangeError(_('A labeling is required when actual signs are not used'))
    return _framing(TreeFrame(g, tree, g.edges[eid].u), eid, None if use_actual_signs else labeling)


def _analyze(frame, start_sign):
    g = frame.graph
    labeling = frame.labeling(start_sign)
    beta = beta_count(g, frame.tree, labeling)
    framings = {eid: _framing(frame, eid, labeling) for eid in frame.non_tree_edges()}
    gamma = sum(1 for value in framings.values() if value)
    return SpanningTreeAnalysis(
        tree=frame.tree, root=frame.root, start_sign=start_sign, labeling=labeling,
        beta=beta, gamma=gamma, framings=framings, band_bound=g.cycle_rank,
        flat_bound=g.cycle_rank + 4 * beta + 2 * gamma,
    )


def analyze_tree(g, tree, root, start_sign):
    """
    :rtype: SpanningTreeAnalysis
    """
    g.require_connected()
    _require_bipartite(g)
    return _analyze(TreeFrame(g, tree, root), start_sign)


def _flat_witness(analysis):
    source = SOURCE_TREE_FLAT.format(tree=sorted(analysis.tree), root=analysis.root,
                                     sign='+' if analysis.start_sign > 0 else '-')
    return BoundWitness(KIND_UPPER, QUANTITY_FLAT, analysis.flat_bound, source)


def flat_upper_bound(g, tree, root, start_sign):
    return _flat_witness(analyze_tree(g, tree, root, start_sign))


def count_spanning_trees(g):
    """
    Matrix-tree theorem, exact determinant of a reduced Laplacian.
    """
    laplacian = zeros(g.vertex_count, g.vertex_count)
    for edge in g.edges:
        laplacian[edge.u, edge.u] += 1
        laplacian[edge.v, edge.v] += 1
        laplacian[edge.u, edge.v] -= 1
        laplacian[edge.v, edge.u] -= 1
    if g.vertex_count == 1:
        return 1
    return int(laplacian[1:, 1:].det(method='bareiss'))


def enumerate_spanning_trees(g):
    """
    Every spanning tree once, as edge id sets in lexicographic order; parallel edges give distinct trees.
    """
    need = g.vertex_count - 1
    edges = g.edges

    def extend(start, chosen, component):
        if len(chosen) == need:
            yield frozenset(chosen)
            return
        for eid in range(start, len(edges) - (need - len(chosen)) + 1):
            a, b = component[edges[eid].u], component[edges[eid].v]
            if a == b:
                continue
            merged = [a if c == b else c for c in component]
            yield from extend(eid + 1, chosen + [eid], merged)

    return extend(0, [], list(range(g.vertex_count)))


def _best_for_tree(g, tree):
    best = None
    for root in range(g.vertex_count):
        frame = TreeFrame(g, tree, root)
        for start_sign in START_SIGNS:
            analysis = _analyze(frame, start_sign)
            if best is None or analysis.flat_bound < best.flat_bound:
                best = analysis
    return best


def _hill_climb(g, tree, rounds):
    best = _best_for_tree(g, tree)
    for _round in range(rounds):
        frame = TreeFrame(g, best.tree, 0)
        improved = None
        for eid in frame.non_tree_edges():
            edge = g.edges[eid]
            for out in sorted(frame.path(edge.u, edge.v)):
                candidate = _best_for_tree(g, (best.tree - {out}) | {eid})
                if candidate.flat_bound < best.flat_bound:
                    improved = candidate
                    break
            if improved is not None:
                break
        if improved is None:
            break
        logger.debug('Edge swap improves flat bound %s -> %s', best.flat_bound, improved.flat_bound)
        best = improved
    return best


def minimize_flat_bound(g, budget=None):
    """
    Least flat bound over spanning trees, roots and start signs.

    All spanning trees are examined when there are at most ``budget`` of them, otherwise
    breadth first trees from every root are improved by edge swaps.

    :rtype: tuple[BoundWitness, SpanningTreeAnalysis]
    """
    g.require_connected()
    _require_bipartite(g)
    if budget is None:
        budget = spanning_tree_budget()
    count = count_spanning_trees(g)
    best = None
    if count <= budget:
        logger.debug('Enumerating %s spanning trees', count)
        for tree in enumerate_spanning_trees(g):
            candidate = _best_for_tree(g, tree)
            if best is None or candidate.flat_bound < best.flat_bound:
                best = candidate
    else:
        logger.info('%s spanning trees exceed the budget %s, using edge swaps', count, budget)
        rounds = hill_climb_rounds()
        for root in range(g.vertex_count):
            candidate = _hill_climb(g, spanning_tree(g, root), rounds)
            if best is None or candidate.flat_bound < best.flat_bound:
                best = candidate
    return _flat_witness(best), best


def braid_band_bound(w):
    g = graph_from_braid(w)
    m = len(w.letters) - (w.strands - 1)
    if m != band_upper_bound(g).value:
        raise InternalInconsistency('Braid length bound %s differs from the cycle rank %s' % (m, g.cycle_rank))
    return BoundWitness(KIND_UPPER, QUANTITY_BAND, m, SOURCE_BRAID_LENGTH)


def _generator_flat_cost(positive, negative):
    costs = []
    for count in (negative, positive):
        if count:
            costs.append(positive + negative - 1 + 2 * (count - 1))
        else:
            costs.append(positive + negative + 1)
    return min(costs)


def braid_flat_bound(w):
    """
    Sum over generators of the cheapest disc sign: every letter of the other sign is a
    flat band, every further letter of the disc sign needs two extra flat bands.
    """
    graph_from_braid(w)
    total = 0
    for i in range(1, w.strands):
        positive = sum(1 for e in w.letters if e == i)
        negative = sum(1 for e in w.letters if e == -i)
        total += _generator_flat_cost(positive, negative)
    return BoundWitness(KIND_UPPER, QUANTITY_FLAT, total, SOURCE_BRAID_FLAT)


def braid_band_framings(w):
    """
    Framing of every band when the first occurrence of each generator is its disc letter.
    :rtype: list[tuple[int, int, int]]
    """
    g = graph_from_braid(w)
    first = {}
    for eid, letter in enumerate(w.letters):
        first.setdefault(abs(letter), eid)
    frame = TreeFrame(g, first.values(), 0)
    return [(eid, letter, _framing(frame, eid)) for eid, letter in enumerate(w.letters) if eid not in frame.tree]


def round_to_parity(value, l):
    """
    Least n >= value with n = l + 1 (mod 2).
    """
    value = max(value, 0)
    return value if (value - l - 1) % 2 == 0 else value + 1


def exclude_value(bound, excluded, l):
    """
    Raise a parity admissible lower bound past ``excluded`` when it sits on it.
    """
    if bound == excluded:
        return round_to_parity(bound + 1, l)
    return bound


def band_lower_bounds(l, conway_degree=None, genus_lower=None):
    """
    :rtype: tuple[BoundWitness, BoundWitness]
    """
    if l < 1:
        raise RangeError(_('A link has at least one component, got %(l)s'), params={'l': l})
    if genus_lower is not None and genus_lower < 0:
        raise RangeError(_('Genus %(genus)s is negative'), params={'genus': genus_lower})
    base, source = l - 1, SOURCE_COMPONENTS
    if genus_lower is not None and 2 * genus_lower + l - 1 > base:
        base, source = 2 * genus_lower + l - 1, SOURCE_GENUS.format(genus=genus_lower)
    if conway_degree is not None and conway_degree > base:
        base, source = conway_degree, SOURCE_CONWAY.format(degree=conway_degree)
    value = round_to_parity(base, l)
    return (BoundWitness(KIND_LOWER, QUANTITY_BAND, value, source),
            BoundWitness(KIND_LOWER, QUANTITY_FLAT, value, source))
