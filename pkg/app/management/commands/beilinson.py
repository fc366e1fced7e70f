from app.decorators import exit_codes
from app.documents import parse_local_system_document, serialize_quiver
from app.quiver import beilinson_quiver

from ._base import DocumentCommand


class Command(DocumentCommand):
    help = 'Beilinson maximal extension of a localsys-v1 document'
    input_help = 'localsys-v1 document, or - for stdin'

    @exit_codes
    def handle(self, *args, **options):
        self.emit(serialize_quiver(beilinson_quiver(parse_local_system_document(self.read_input(options)))))
