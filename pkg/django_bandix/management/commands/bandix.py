import sys

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError, CommandParser
from django.utils.translation import gettext as _

from django_bandix.braid import parse_braid
from django_bandix.constants import (
    EXIT_INCONSISTENCY,
    EXIT_INVALID_INPUT,
    FORMATS,
    default_format,
)
from django_bandix.conway import conway_from_seifert, seifert_matrix_from_braid
from django_bandix.exceptions import InternalInconsistency
from django_bandix.pretzel import parse_pretzel
from django_bandix.report import analyze_braid, analyze_graph, analyze_pretzel, render, render_error
from django_bandix.seifertgraph import graph_from_file


def _word(tokens):
    return ' '.join(tokens)


class BandixParser(CommandParser):
    """
    Usage errors are invalid input, exit status 1 instead of argparse's 2.
    """

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(EXIT_INVALID_INPUT, _('%(prog)s: error: %(message)s\n') % {'prog': self.prog,
                                                                                 'message': message})
        raise CommandError('Error: %s' % message, returncode=EXIT_INVALID_INPUT)


class Command(BaseCommand):
    help = _('Lower and upper bounds for the band index and the flat band index of a link')

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.__class__ = BandixParser
        return parser

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='subcommand', required=True, parser_class=BandixParser)

        braid = subparsers.add_parser('braid', help=_('Closed braid given by signed generator indices'))
        braid.add_argument('word', nargs='+', type=str, help=_('Braid word, e.g. "-1 2 -1 2"'))
        braid.add_argument('--strands', action='store', type=int, default=None, dest='strands',
                           help=_('Strand count, defaults to the largest generator plus one'))
        braid.add_argument('--genus', action='store', type=int, default=None, dest='genus',
                           help=_('Known genus of the link'))
        self._add_common(braid)

        pretzel = subparsers.add_parser('pretzel', help=_('Pretzel link L(p1, ..., pn)'))
        pretzel.add_argument('params', nargs='+', type=str, help=_('Pretzel parameters, e.g. "4,4,4"'))
        self._add_common(pretzel)

        graph = subparsers.add_parser('graph', help=_('Induced graph file of a canonical Seifert surface'))
        graph.add_argument('file', type=str, help=_('Graph file path'))
        graph.add_argument('--components', action='store', type=int, required=True, dest='components',
                           help=_('Number of link components'))
        self._add_common(graph)

        conway = subparsers.add_parser('conway', help=_('Conway polynomial coefficients of a closed braid'))
        conway.add_argument('word', nargs='+', type=str, help=_('Braid word'))
        conway.add_argument('--strands', action='store', type=int, default=None, dest='strands',
                            help=_('Strand count'))
        for sub in subparsers.choices.values():
            sub.called_from_command_line = parser.called_from_command_line

    def _add_common(self, parser):
        parser.add_argument('--budget', action='store', type=int, default=None, dest='budget',
                            help=_('Spanning trees enumerated before switching to edge swaps'))
        parser.add_argument('--format', action='store', choices=FORMATS, default=None, dest='format',
                            help=_('Output format'))

    def handle(self, *args, **options):
        output_format = options.get('format') or default_format()
        try:
            self.stdout.write(self.run(options, output_format), ending='')
        except ValidationError as ex:
            self.stderr.write(render_error(ex, output_format), ending='')
            raise CommandError(_('Invalid input'), returncode=EXIT_INVALID_INPUT)
        except InternalInconsistency as ex:
            self.stderr.write(render_error(ex, output_format), ending='')
            raise CommandError(_('Internal inconsistency'), returncode=EXIT_INCONSISTENCY)

    def run(self, options, output_format):
        subcommand = options['subcommand']
        if subcommand == 'braid':
            word = parse_braid(_word(options['word']), options['strands'])
            report = analyze_braid(word, known_genus=options['genus'], budget=options['budget'])
        elif subcommand == 'pretzel':
            report = analyze_pretzel(parse_pretzel(_word(options['params'])), budget=options['budget'])
        elif subcommand == 'graph':
            try:
                with open(options['file']) as graph_file:
                    text = graph_file.read()
            except OSError as ex:
                raise CommandError(_('Cannot read {}: {}').format(options['file'], ex.strerror),
                                   returncode=EXIT_INVALID_INPUT)
            report = analyze_graph(graph_from_file(text), options['components'], budget=options['budget'],
                                   description='graph {}'.format(options['file']))
        else:
            word = parse_braid(_word(options['word']), options['strands'])
            polynomial = conway_from_seifert(seifert_matrix_from_braid(word))
            return '{}\n{}\n'.format(' '.join(str(c) for c in polynomial.coeffs), polynomial)
        return render(report, output_format)
