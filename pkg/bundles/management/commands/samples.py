import json
from pathlib import Path

from ... import samples
from ...serializers import complex_to_json, pair_to_json
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Write the example complexes and dicharacteristic pairs as JSON files'

    takes_complex = False

    def add_command_arguments(self, parser):
        parser.add_argument('directory', help='Output directory (created if missing)')

    def run(self, **options):
        directory = Path(options['directory'])
        directory.mkdir(parents=True, exist_ok=True)
        written = []
        for name, build in samples.NAMED_COMPLEXES.items():
            written.append(self.write(directory / f'{name}.json', complex_to_json(build())))
        for name, build in samples.NAMED_PAIRS.items():
            written.append(self.write(directory / f'{name}.json', pair_to_json(build())))
        self.emit({'written': written})

    def write(self, path, payload):
        path.write_text(json.dumps(payload, indent=2) + '\n', encoding='utf-8')
        return str(path)
