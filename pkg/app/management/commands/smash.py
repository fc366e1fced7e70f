from app.decorators import exit_codes
from app.documents import parse_quiver_document, serialize_quiver
from app.stokes import smash_quiver

from ._base import DocumentCommand


class Command(DocumentCommand):
    help = 'Smash quiver (Psi, Phi_Sigma, U_Sigma, V_Sigma) at the single point 0'

    @exit_codes
    def handle(self, *args, **options):
        self.emit(serialize_quiver(smash_quiver(parse_quiver_document(self.read_input(options)))))
