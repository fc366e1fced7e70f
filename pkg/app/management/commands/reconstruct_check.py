from django.core.management.base import CommandError

from app.decorators import DOMAIN_ERROR_EXIT, exit_codes
from app.documents import parse_quiver_document, serialize_reconstruct_check
from app.quiver import reconstruct_G

from ._base import DocumentCommand


class Command(DocumentCommand):
    help = 'Rebuild a quiver from its Beilinson complex and compare with the input'

    @exit_codes
    def handle(self, *args, **options):
        q = parse_quiver_document(self.read_input(options))
        document = serialize_reconstruct_check(q, reconstruct_G(q))
        self.emit(document)
        if not document['passed']:
            raise CommandError('reconstruction differs from the input quiver', returncode=DOMAIN_ERROR_EXIT)
