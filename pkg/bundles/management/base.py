"""
Shared plumbing for the bundle commands.

Every command prints one JSON document on stdout. Input errors exit with
status 2, domain failures (a requested object does not exist) with 1.
"""

import json
import logging
from pathlib import Path

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from ..forms import complex_from_data, form_error_text
from ..serializers import dumps, face_to_json

logger = logging.getLogger(__name__)

INPUT_ERROR = 2
DOMAIN_FAILURE = 1


class BundleCommand(BaseCommand):
    requires_system_checks = []
    requires_migrations_checks = False

    # Commands that read a complex file take it as the first positional.
    takes_complex = True

    def add_arguments(self, parser):
        if self.takes_complex:
            parser.add_argument('complex', help='Path to a complex JSON file {"m": ..., "facets": [...]}')
            parser.add_argument(
                '--explain', action='store_true',
                help='Print the order of top faces and vertices used by sign vectors to stderr',
            )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    # ------------------------------------------------------------------
    # Input
    # ------------------------------------------------------------------

    def load_json(self, path):
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as exc:
            raise CommandError(f'{path}: {exc.strerror}', returncode=INPUT_ERROR)
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise CommandError(f'{path}: malformed JSON ({exc.msg} at line {exc.lineno})', returncode=INPUT_ERROR)

    def load_complex(self, path):
        data = self.load_json(path)
        try:
            return complex_from_data(data)
        except ValidationError as exc:
            raise CommandError(f'{path}: {"; ".join(exc.messages)}', returncode=INPUT_ERROR)

    def validate(self, form, source='options'):
        if not form.is_valid():
            raise CommandError(f'{source}: {form_error_text(form)}', returncode=INPUT_ERROR)
        return form.cleaned_data

    # ------------------------------------------------------------------
    # Output
    # ------------------------------------------------------------------

    def emit(self, payload):
        self.stdout.write(dumps(payload))

    def explain(self, complex_):
        top = [face_to_json(face) for face in complex_.top_faces()]
        self.stderr.write(f'top faces (sign vector order): {json.dumps(top)}')
        self.stderr.write(f'vertices (vertex sign order): {list(range(1, complex_.m + 1))}')

    def flag_non_pure(self, complex_, payload):
        """Euler classes only see faces of cardinality n; say so when K has smaller maximal faces."""
        if not complex_.is_pure():
            smaller = [face_to_json(face) for face in complex_.maximal_faces if len(face) < complex_.n]
            payload['pure'] = False
            payload['warning'] = (
                f'K is not pure: maximal faces {smaller} have fewer than n={complex_.n} vertices '
                f'and do not enter e_ω'
            )
            logger.warning(f'[PURITY] non-pure complex {complex_!r}; e_ω uses the top faces only')
        return payload

    def fail(self, payload, message):
        self.emit(payload)
        raise CommandError(message, returncode=DOMAIN_FAILURE)

    # ------------------------------------------------------------------
    # Dispatch
    # ------------------------------------------------------------------

    def handle(self, *args, **options):
        try:
            if self.takes_complex:
                complex_ = self.load_complex(options['complex'])
                if options.get('explain'):
                    self.explain(complex_)
                self.run(complex_, **options)
            else:
                self.run(**options)
        except ValidationError as exc:
            raise CommandError('; '.join(exc.messages), returncode=INPUT_ERROR)
        except ValueError as exc:
            logger.info(f'[COMMAND] {self.__module__.rsplit(".", 1)[-1]} rejected input: {exc}')
            raise CommandError(str(exc), returncode=INPUT_ERROR)

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of BundleCommand must provide a run() method')
