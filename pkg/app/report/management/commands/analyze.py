from extractor.serializers import model_to_json
from report.commands import AnalysisCommand
from report.renderers import render_json

MODEL_FILE = 'model.json'


class Command(AnalysisCommand):
    help = 'Parse a source tree and write its class model as JSON.'
    input_modes = ('source',)

    def add_options(self, parser):
        parser.add_argument('--out', metavar='DIR',
                            help=f'Write {MODEL_FILE} into DIR.')

    def run(self, config):
        model = self.load_model(config)
        self.emit(config, MODEL_FILE, render_json(model_to_json(model)))
        if config.out is not None:
            self.stdout.write(self.style.SUCCESS(
                f'{len(model)} classes from {len(model.units)} files'))
