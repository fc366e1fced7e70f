"""
Single entry point over the management commands.

    python -m app.cli stokes airy.json --pretty

run_command(argv) returns the exit code and captured output instead of
exiting, which is what the command tests use.
"""
import io
import os
import sys
from importlib import import_module
from typing import NamedTuple

from .decorators import PARSE_ERROR_EXIT

PUBLIC_COMMANDS = {
    'validate': 'validate',
    'stokes': 'stokes',
    'fourier': 'fourier',
    'smash': 'smash',
    'beilinson': 'beilinson',
    'localize': 'localize',
    'reconstruct-check': 'reconstruct_check',
    'exponents': 'exponents',
    'from-cover': 'from_cover',
    'monodromy': 'monodromy',
    'sector': 'sector',
    'random': 'random',
}
COMMANDS = {**PUBLIC_COMMANDS, **{module: module for module in PUBLIC_COMMANDS.values()}}

USAGE = 'usage: stokesquiver <command> [options]\ncommands: ' + ', '.join(PUBLIC_COMMANDS)


class CommandResult(NamedTuple):
    code: int
    stdout: str
    stderr: str


def run_command(argv, stdin=None):
    if not argv or argv[0] not in COMMANDS:
        unknown = f'unknown command {argv[0]!r}\n' if argv else ''
        return CommandResult(PARSE_ERROR_EXIT, '', unknown + USAGE + '\n')
    name = COMMANDS[argv[0]]
    out, err = io.StringIO(), io.StringIO()
    command = import_module(f'app.management.commands.{name}').Command(stdout=out, stderr=err, no_color=True)
    command.stdin = stdin
    code = 0
    real_stderr = sys.stderr
    sys.stderr = err
    try:
        command.run_from_argv(['stokesquiver', name, *argv[1:]])
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
    finally:
        sys.stderr = real_stderr
    return CommandResult(code, out.getvalue(), err.getvalue())


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'stokesquiver.settings')
    import django

    django.setup()
    result = run_command(sys.argv[1:])
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    sys.exit(result.code)


if __name__ == '__main__':
    main()
