"""
Band index reports: every bound known for B(L) and FB(L) together with its source.
"""
import json
import logging
from dataclasses import dataclass, field

from django.core.serializers.json import DjangoJSONEncoder

from django_bandix.bands import (
    BoundWitness,
    band_lower_bounds,
    band_upper_bound,
    braid_band_bound,
    braid_flat_bound,
    exclude_value,
    minimize_flat_bound,
)
from django_bandix.braid import closure_components
from django_bandix.constants import (
    FORMAT_JSON,
    KIND_LOWER,
    KIND_UPPER,
    QUANTITY_BAND,
    QUANTITY_FLAT,
)
from django_bandix.conway import (
    ConwayPolynomial,
    band_index_one_check,
    conway_degree_genus_bound,
    conway_from_seifert,
    flat2_form_check,
    seifert_matrix_from_braid,
)
from django_bandix.exceptions import (
    InternalInconsistency,
    InvalidInput,
    NegativeGenus,
    OddParam,
    ParityError,
    RangeError,
)
from django_bandix.pretzel import corollary_band_index, corollary_input, theta_graph, trace_components
from django_bandix.seifertgraph import euler_data, graph_from_braid, is_bipartite
from django_bandix.signals import analysis_finished, analysis_started, bound_recorded

logger = logging.getLogger(__name__)

SOURCE_NOT_FLAT_2 = 'FB != 2, Conway polynomial is not of the form 1 - k(k+1)z^2'
SOURCE_NOT_FLAT_1 = 'FB != 1, only the trivial 2-component link is flat 1-banded and its Conway polynomial is 0'
SOURCE_NOT_TRIVIAL = '{quantity} != 0, only the trivial knot has index 0 and its Conway polynomial is 1'
SOURCE_BAND_ONE = 'B = 1, closed 2-braid sigma_1^(2n) with n = {n}'
SOURCE_GENUS_EQUALITY = 'B = 2g + l - 1 = {value}, genus equals canonical genus'
SOURCE_COROLLARY = 'B = {value} for the pretzel knot K({params}), case {case}'

NOTE_FLAT_NOT_EXACT = ('FB is not exact: flat banded surfaces found outside spanning tree '
                       'modifications, such as the flat 4-banded surface of the figure eight knot, are not searched')
NOTE_ANTIPARALLEL = ('The closed 2-braid sigma_1^({power}) has band index 1 with antiparallel strands; '
                     'this closure orients both strands in parallel so B = 1 is not certified')
NOTE_NOT_BIPARTITE = 'Flat bounds omitted: the induced graph is not bipartite'
NOTE_INVALID = 'invalid_input: {quantity} lower bound {lower} exceeds upper bound {upper}'
NOTE_PARITY = 'parity violation: {quantity} bounds of a knot must be even, components are congruent to n + 1 modulo 2'
NOTE_GENUS_SHORTCUT = 'B exact from g = g_c = {genus}'


@dataclass(frozen=True)
class IndexBounds(object):
    lower: int = None
    upper: int = None
    witnesses: tuple = field(default=())

    @property
    def exact(self):
        return self.lower is not None and self.lower == self.upper

    def as_dict(self):
        return {
            'lower': self.lower,
            'upper': self.upper,
            'exact': self.exact,
            'witnesses': [w.as_dict() for w in self.witnesses],
        }


@dataclass(frozen=True)
class BandIndexReport(object):
    input: str
    l: int
    s: int = None
    c: int = None
    canonical_genus: int = None
    conway: ConwayPolynomial = None
    band: IndexBounds = field(default_factory=IndexBounds)
    flat: IndexBounds = field(default_factory=IndexBounds)
    notes: tuple = field(default=())

    @property
    def B_lower(self):
        return self.band.lower

    @property
    def B_upper(self):
        return self.band.upper

    @property
    def B_exact(self):
        return self.band.exact

    @property
    def FB_lower(self):
        return self.flat.lower

    @property
    def FB_upper(self):
        return self.flat.upper

    @property
    def FB_exact(self):
        return self.flat.exact

    @property
    def witnesses(self):
        return self.band.witnesses + self.flat.witnesses

    def as_dict(self):
        return {
            'input': self.input,
            'l': self.l,
            'seifert': {'s': self.s, 'c': self.c, 'canonical_genus': self.canonical_genus},
            'conway': None if self.conway is None else {'coeffs': list(self.conway.coeffs)},
            'B': self.band.as_dict(),
            'FB': self.flat.as_dict(),
            'notes': list(self.notes),
        }


class _BoundsBuilder(object):
    """
    Running interval of one index; every change is backed by a witness.
    """

    def __init__(self, quantity, l):
        self.quantity = quantity
        self.l = l
        self.lower = None
        self.upper = None
        self.witnesses = []

    def record(self, witness):
        if witness.quantity != self.quantity:
            raise InternalInconsistency('Witness for %s recorded as %s' % (witness.quantity, self.quantity))
        self.witnesses.append(witness)
        bound_recorded.send(sender=BandIndexReport, witness=witness)
        if witness.kind == KIND_LOWER:
            self.lower = witness.value if self.lower is None else max(self.lower, witness.value)
        else:
            self.upper = witness.value if self.upper is None else min(self.upper, witness.value)

    def exclude(self, value, source):
        if self.lower is None:
            return
        raised = exclude_value(self.lower, value, self.l)
        if raised != self.lower:
            logger.info('%s != %s raises the lower bound to %s', self.quantity, value, raised)
            self.record(BoundWitness(KIND_LOWER, self.quantity, raised, source))

    def certify(self, value, source):
        self.record(BoundWitness(KIND_LOWER, self.quantity, value, source))
        self.record(BoundWitness(KIND_UPPER, self.quantity, value, source))

    def build(self, notes):
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            notes.append(NOTE_INVALID.format(quantity=self.quantity, lower=self.lower, upper=self.upper))
        if self.l == 1 and any(v is not None and v % 2 for v in (self.lower, self.upper)):
            notes.append(NOTE_PARITY.format(quantity=self.quantity))
        return IndexBounds(self.lower, self.upper, tuple(self.witnesses))


def _finish(description, l, band, flat, notes, seifert=None, conway=None):
    report = BandIndexReport(
        input=description,
        l=l,
        s=seifert.s if seifert else None,
        c=seifert.c if seifert else None,
        canonical_genus=seifert.canonical_genus if seifert else None,
        conway=conway,
        band=band.build(notes),
        flat=flat.build(notes),
        notes=tuple(notes),
    )
    analysis_finished.send(sender=BandIndexReport, report=report)
    return report


def _record_lower_bounds(band, flat, l, conway_degree=None, genus_lower=None):
    band_low, flat_low = band_lower_bounds(l, conway_degree=conway_degree, genus_lower=genus_lower)
    band.record(band_low)
    flat.record(flat_low)


def analyze_braid(w, known_genus=None, budget=None):
    """
    :rtype: BandIndexReport
    """
    if known_genus is not None and known_genus < 0:
        raise RangeError('Genus %(genus)s is negative', params={'genus': known_genus})
    description = 'braid {} ({} strands)'.format(str(w) or '(empty)', w.strands)
    analysis_started.send(sender=BandIndexReport, description=description)
    l = closure_components(w)
    g = graph_from_braid(w)
    seifert = euler_data(g, l)
    band = _BoundsBuilder(QUANTITY_BAND, l)
    flat = _BoundsBuilder(QUANTITY_FLAT, l)
    notes = []

    graph_bound = band_upper_bound(g)
    braid_bound = braid_band_bound(w)
    if graph_bound.value != braid_bound.value:
        raise InternalInconsistency('Band bounds %s and %s differ' % (graph_bound.value, braid_bound.value))
    band.record(graph_bound)
    band.record(braid_bound)
    flat.record(braid_flat_bound(w))
    flat.record(minimize_flat_bound(g, budget=budget)[0])

    conway = conway_from_seifert(seifert_matrix_from_braid(w))
    if known_genus is not None:
        genus_lower = known_genus
    else:
        genus_lower = conway_degree_genus_bound(conway, l)
    _record_lower_bounds(band, flat, l, conway_degree=conway.degree, genus_lower=genus_lower)

    if l == 1 and conway != ConwayPolynomial.one():
        band.exclude(0, SOURCE_NOT_TRIVIAL.format(quantity=QUANTITY_BAND))
        flat.exclude(0, SOURCE_NOT_TRIVIAL.format(quantity=QUANTITY_FLAT))
    if l == 1 and flat2_form_check(conway) is None:
        flat.exclude(2, SOURCE_NOT_FLAT_2)
    if l == 2 and not conway.is_zero():
        flat.exclude(1, SOURCE_NOT_FLAT_1)

    n = band_index_one_check(w)
    if n is not None and abs(n) == 1:
        if not band.lower <= 1 <= band.upper:
            raise InternalInconsistency('Band index 1 certificate outside [%s, %s]' % (band.lower, band.upper))
        band.certify(1, SOURCE_BAND_ONE.format(n=n))
    elif n is not None:
        notes.append(NOTE_ANTIPARALLEL.format(power=2 * n))

    if known_genus is not None and 2 * known_genus + l - 1 == band.upper:
        band.record(BoundWitness(KIND_LOWER, QUANTITY_BAND, band.upper,
                                 SOURCE_GENUS_EQUALITY.format(value=band.upper)))
        notes.append(NOTE_GENUS_SHORTCUT.format(genus=known_genus))

    if flat.lower is not None and flat.upper is not None and flat.lower < flat.upper:
        notes.append(NOTE_FLAT_NOT_EXACT)
    return _finish(description, l, band, flat, notes, seifert=seifert, conway=conway)


def analyze_pretzel(spec, budget=None):
    """
    All even parameters go through the theta graph, a single even parameter through the closed formula.
    :rtype: BandIndexReport
    """
    description = 'pretzel {}'.format(spec)
    analysis_started.send(sender=BandIndexReport, description=description)
    l = trace_components(spec)
    band = _BoundsBuilder(QUANTITY_BAND, l)
    flat = _BoundsBuilder(QUANTITY_FLAT, l)
    notes = []
    if spec.is_all_even():
        g = theta_graph(spec)
        seifert = euler_data(g, l)
        band.record(band_upper_bound(g))
        flat.record(minimize_flat_bound(g, budget=budget)[0])
        _record_lower_bounds(band, flat, l)
        if flat.lower < flat.upper:
            notes.append(NOTE_FLAT_NOT_EXACT)
        return _finish(description, l, band, flat, notes, seifert=seifert)

    if len(spec.even_positions()) != 1:
        raise OddParam()
    params = corollary_input(spec)
    if l != 1:
        raise InternalInconsistency('%s traced to %s components, expected a knot' % (spec, l))
    value, case = corollary_band_index(params)
    band.certify(value, SOURCE_COROLLARY.format(
        value=value, params=','.join(str(p) for p in (params.p1,) + params.odds), case=case))
    _record_lower_bounds(band, flat, l, genus_lower=value // 2)
    return _finish(description, l, band, flat, notes)


def analyze_graph(g, l, budget=None, description=None):
    """
    :param l: component count of the surface boundary
    :rtype: BandIndexReport
    """
    description = description or 'graph ({} vertices, {} edges)'.format(g.s, g.c)
    analysis_started.send(sender=BandIndexReport, description=description)
    g.require_connected()
    try:
        seifert = euler_data(g, l)
    except (ParityError, NegativeGenus) as ex:
        raise InvalidInput('l = %(l)s is incompatible with the surface: %(reason)s',
                           params={'l': l, 'reason': ' '.join(str(m) for m in ex.messages)})
    band = _BoundsBuilder(QUANTITY_BAND, l)
    flat = _BoundsBuilder(QUANTITY_FLAT, l)
    notes = []
    band.record(band_upper_bound(g))
    if is_bipartite(g)[0]:
        flat.record(minimize_flat_bound(g, budget=budget)[0])
    else:
        logger.warning('%s is not bipartite, flat bounds omitted', description)
        notes.append(NOTE_NOT_BIPARTITE)
    _record_lower_bounds(band, flat, l)
    return _finish(description, l, band, flat, notes, seifert=seifert)


def _interval(bounds):
    lower = '?' if bounds.lower is None else bounds.lower
    upper = '?' if bounds.upper is None else bounds.upper
    return '[{}, {}]{}'.format(lower, upper, ' exact' if bounds.exact else '')


def render_text(report):
    lines = [
        'Input: {}'.format(report.input),
        'Components l: {}'.format(report.l),
    ]
    if report.s is not None:
        lines.append('Seifert: s={} c={} canonical genus={}'.format(report.s, report.c, report.canonical_genus))
    if report.conway is not None:
        lines.append('Conway: {}'.format(report.conway))
    lines.append('B:  {}'.format(_interval(report.band)))
    lines.append('FB: {}'.format(_interval(report.flat)))
    lines.append('Witnesses:')
    for witness in report.witnesses:
        lines.append('  {:<2} {:<5} {:>3}  {}'.format(witness.quantity, witness.kind, witness.value, witness.source))
    if report.notes:
        lines.append('Notes:')
        for note in report.notes:
            lines.append('  - {}'.format(note))
    return '\n'.join(lines) + '\n'


def render(report, format='text'):
    if format == FORMAT_JSON:
        return json.dumps(report.as_dict(), indent=2, cls=DjangoJSONEncoder) + '\n'
    return render_text(report)


def render_error(ex, format='text'):
    """
    Machine readable description of a failed analysis.
    """
    code = getattr(ex, 'code', None) or 'invalid_input'
    if hasattr(ex, 'messages'):
        message = ' '.join(str(m) for m in ex.messages)
    else:
        message = str(ex)
    if format == FORMAT_JSON:
        return json.dumps({'error': {'code': code, 'message': message}}, indent=2, cls=DjangoJSONEncoder) + '\n'
    return 'Error [{}]: {}\n'.format(code, message)

