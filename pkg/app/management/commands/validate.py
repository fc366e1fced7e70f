from app.decorators import exit_codes
from app.documents import parse_any_document
from app.exactnum import format_gauss_literal
from app.forms import COVER_FORMAT, LOCALSYS_FORMAT

from ._base import DocumentCommand


def describe(document_format, value):
    if document_format == COVER_FORMAT:
        return f'{value.cover.kind.value} cover of generic degree {value.cover.generic_degree}'
    order = ' < '.join(format_gauss_literal(c) for c in value.points) or 'no points'
    if document_format == LOCALSYS_FORMAT:
        dims = f'rank {value.rank}'
    else:
        dims = f'psi_dim {value.psi_dim}, phi dims {list(value.block_dims)}'
    return f'{dims}; beta-order {order}; frame orientation {value.frame.orientation:+d}'


class Command(DocumentCommand):
    help = 'Validate a quiver-v1, localsys-v1 or cover-v1 document'

    @exit_codes
    def handle(self, *args, **options):
        document_format, value = parse_any_document(self.read_input(options))
        self.stdout.write(self.style.SUCCESS(f'valid {document_format}: {describe(document_format, value)}'))
