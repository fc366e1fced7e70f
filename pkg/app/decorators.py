import functools
import logging

from django.core.management.base import CommandError

from .exceptions import DomainError, InternalInconsistency, ParseError

logger = logging.getLogger(__name__)

PARSE_ERROR_EXIT = 2
DOMAIN_ERROR_EXIT = 1


def exit_codes(handle):
    """
    Decorator for a management command's handle() that maps library errors
    to CommandError with the documented exit code.

        ParseError             -> 2
        DomainError            -> 1
        InternalInconsistency  -> 1
    """
    @functools.wraps(handle)
    def wrapper(self, *args, **options):
        try:
            return handle(self, *args, **options)
        except ParseError as exc:
            raise CommandError(f'parse error: {exc}', returncode=PARSE_ERROR_EXIT) from exc
        except DomainError as exc:
            raise CommandError(f'{type(exc).__name__}: {exc}', returncode=DOMAIN_ERROR_EXIT) from exc
        except InternalInconsistency as exc:
            logger.error('internal inconsistency: %s', exc)
            raise CommandError(f'internal inconsistency: {exc}', returncode=DOMAIN_ERROR_EXIT) from exc

    return wrapper
