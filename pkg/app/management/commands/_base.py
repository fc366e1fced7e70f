import sys

from django.core.management.base import BaseCommand

from app.documents import dump_document, read_source
from app.exactnum import parse_gauss_literal, to_complex
from app.exceptions import ParseError
from app.quiver import Frame


def frame_option(text):
    """--frame "a,b" with Gaussian literals, e.g. "i,1"."""
    parts = text.split(',')
    if len(parts) != 2:
        raise ParseError(f'--frame expects "alpha,beta", got {text!r}')
    return Frame(parse_gauss_literal(parts[0]), parse_gauss_literal(parts[1]))


def point_option(text):
    return to_complex(parse_gauss_literal(text))


class DocumentCommand(BaseCommand):
    """A command that reads one JSON document (or stdin for "-") and writes one."""

    requires_system_checks = []
    stealth_options = ('stdin',)
    input_help = 'input document, or - for stdin'

    def add_arguments(self, parser):
        parser.add_argument('file', help=self.input_help)
        self.add_options(parser)

    def add_options(self, parser):
        pass

    def read_input(self, options):
        stdin = getattr(self, 'stdin', None) or options.get('stdin') or sys.stdin
        return read_source(options['file'], stdin)

    def emit(self, document):
        self.stdout.write(dump_document(document))
