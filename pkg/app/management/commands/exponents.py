from app.decorators import exit_codes
from app.documents import parse_quiver_document, serialize_exponents
from app.stokes import exponential_components

from ._base import DocumentCommand


class Command(DocumentCommand):
    help = 'Exponential components E^(c w) at infinity with multiplicities dim Phi_c'

    @exit_codes
    def handle(self, *args, **options):
        q = parse_quiver_document(self.read_input(options))
        self.emit(serialize_exponents(exponential_components(q), q.frame))
