from app.covers import ContinuationOptions, SheetOrder, quiver_from_cover
from app.decorators import exit_codes
from app.documents import parse_cover_document, serialize_quiver

from ._base import DocumentCommand, frame_option, point_option


def add_continuation_options(parser):
    parser.add_argument('--sheet-order', choices=[order.value for order in SheetOrder],
                        default=SheetOrder.LEXICOGRAPHIC.value, help='numbering of the sheets at the basepoint')
    parser.add_argument('--basepoint', help='basepoint as a Gaussian literal, e.g. "3+1/2i"')
    parser.add_argument('--radius', type=float, help='loop radius around each critical value')
    parser.add_argument('--step', type=float, help='initial continuation step as a fraction of the loop radius')
    parser.add_argument('--workers', type=int, help='loops tracked in parallel')


def continuation_arguments(options):
    """Keyword arguments for the cover pipeline from parsed flags."""
    return {
        'options': ContinuationOptions.from_settings(initial_step=options['step'], workers=options['workers']),
        'sheet_order': SheetOrder(options['sheet_order']),
        'basepoint': point_option(options['basepoint']) if options['basepoint'] else None,
        'radius': options['radius'],
    }


class Command(DocumentCommand):
    help = 'Extract the quiver of a branched cover from a cover-v1 document'
    input_help = 'cover-v1 document, or - for stdin'

    def add_options(self, parser):
        parser.add_argument('--frame', help='frame as "alpha,beta", default "i,1" or the document frame')
        add_continuation_options(parser)

    @exit_codes
    def handle(self, *args, **options):
        document = parse_cover_document(self.read_input(options))
        frame = frame_option(options['frame']) if options['frame'] else document.frame
        q = quiver_from_cover(
            document.cover, frame, exact_values=document.critical_values, **continuation_arguments(options),
        )
        self.emit(serialize_quiver(q))
