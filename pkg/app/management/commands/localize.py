from app.decorators import exit_codes
from app.documents import parse_local_system_document, serialize_quiver
from app.quiver import localized_quiver

from ._base import DocumentCommand


class Command(DocumentCommand):
    help = 'Localized quiver (u = 1, v = 1 - T) of a localsys-v1 document'
    input_help = 'localsys-v1 document, or - for stdin'

    @exit_codes
    def handle(self, *args, **options):
        self.emit(serialize_quiver(localized_quiver(parse_local_system_document(self.read_input(options)))))
