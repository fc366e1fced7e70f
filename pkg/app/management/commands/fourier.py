from app.decorators import exit_codes
from app.documents import parse_quiver_document, serialize_quiver
from app.stokes import fourier_quiver

from ._base import DocumentCommand


class Command(DocumentCommand):
    help = 'Quiver of the Fourier transform: one node at 0, frame (beta, -alpha)'

    @exit_codes
    def handle(self, *args, **options):
        self.emit(serialize_quiver(fourier_quiver(parse_quiver_document(self.read_input(options)))))
