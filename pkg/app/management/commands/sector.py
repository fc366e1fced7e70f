from django.core.management.base import BaseCommand

from app.covers import BUILTIN_COVERS, ramified_sector_multipliers
from app.decorators import exit_codes
from app.documents import dump_document, render_sector, serialize_sector


class Command(BaseCommand):
    help = 'Sector-indexed Stokes multipliers of a built-in cover, end to end from f'

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--example', required=True, choices=sorted(BUILTIN_COVERS))
        parser.add_argument('--pretty', action='store_true')

    @exit_codes
    def handle(self, *args, **options):
        report = ramified_sector_multipliers(options['example'])
        if options['pretty']:
            self.stdout.write(render_sector(report))
        else:
            self.stdout.write(dump_document(serialize_sector(report)))
