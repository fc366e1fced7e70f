from django.core.management.base import BaseCommand

from app.decorators import exit_codes
from app.documents import dump_document, serialize_quiver
from app.exceptions import ParseError
from app.utils import random_quiver

MAX_POINTS = 15


class Command(BaseCommand):
    help = 'A valid pseudo-random quiver-v1 document from a seed'

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--n', type=int, help='number of points (default: drawn, at most 5)')
        parser.add_argument('--dims', type=int, default=4, help='bound on psi_dim and every phi_dim')
        parser.add_argument('--complex', action='store_true', help='allow Gaussian rational entries')

    @exit_codes
    def handle(self, *args, **options):
        n, dims = options['n'], options['dims']
        if n is not None and not 0 <= n <= MAX_POINTS:
            raise ParseError(f'--n must lie in [0, {MAX_POINTS}]')
        if dims < 0:
            raise ParseError('--dims must be non-negative')
        q = random_quiver(options['seed'], n=n, max_dim=dims, complex_entries=options['complex'])
        self.stdout.write(dump_document(serialize_quiver(q)))
