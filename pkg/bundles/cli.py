"""
`run(argv)`: one command invocation, returning its exit status.

    python -m bundles.cli structures square.json --omega -,+,+,+
"""

import os
import sys

import django
from django.apps import apps
from django.core.management import ManagementUtility, get_commands

from .management.base import INPUT_ERROR


def run(argv=None):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'djbundles.settings')
    if not apps.ready:
        django.setup()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and not argv[0].startswith('-') and argv[0] != 'help' and argv[0] not in get_commands():
        sys.stderr.write(f"Unknown command: '{argv[0]}'. Type 'bundles help' for usage.\n")
        return INPUT_ERROR
    utility = ManagementUtility(['bundles', *argv])
    try:
        utility.execute()
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == '__main__':
    sys.exit(run())
