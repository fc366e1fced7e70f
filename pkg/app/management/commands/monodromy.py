from app.covers import cover_monodromy
from app.decorators import exit_codes
from app.documents import parse_cover_document, serialize_monodromy

from ._base import DocumentCommand
from .from_cover import add_continuation_options, continuation_arguments


class Command(DocumentCommand):
    help = 'Critical values, sheet permutations and fibers of a cover-v1 document'
    input_help = 'cover-v1 document, or - for stdin'

    def add_options(self, parser):
        add_continuation_options(parser)

    @exit_codes
    def handle(self, *args, **options):
        document = parse_cover_document(self.read_input(options))
        monodromy = cover_monodromy(document.cover, **continuation_arguments(options))
        self.emit(serialize_monodromy(monodromy, document.frame))
