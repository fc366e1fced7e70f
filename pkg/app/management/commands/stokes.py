from app.decorators import exit_codes
from app.documents import parse_quiver_document, render_stokes, serialize_stokes
from app.stokes import stokes_matrices, stokes_plus_inverse, verify_theorem_identity

from ._base import DocumentCommand


class Command(DocumentCommand):
    help = 'Stokes multipliers S_plus, S_minus of a quiver-v1 document, with identity checks'

    def add_options(self, parser):
        parser.add_argument('--pretty', action='store_true', help='aligned block matrices instead of JSON')

    @exit_codes
    def handle(self, *args, **options):
        q = parse_quiver_document(self.read_input(options))
        pair = stokes_matrices(q)
        inverse = stokes_plus_inverse(q)
        report = verify_theorem_identity(q)
        if options['pretty']:
            self.stdout.write(render_stokes(pair, inverse, report))
        else:
            self.emit(serialize_stokes(pair, inverse, report, q.frame))
