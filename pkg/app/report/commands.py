"""
Shared base for the analysis management commands.
"""
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import ConfigError, KeyClassError
from gain.engine import DISCOUNTS
from report import builder
from report.config import load_config
from report.serializers import FORMATS, KIND_LABELS, SECTIONS


class AnalysisCommand(BaseCommand):
    """Parses the common flags, loads the configuration and maps errors.

    Subclasses list the input modes they accept and implement ``run``.
    """
    input_modes = ('source', 'model')
    input_help = {
        'source': 'Root directory of the *.java sources to analyse.',
        'model': 'Class model JSON written by the analyze command.',
        'graph': 'Graph interchange file.',
    }

    def add_arguments(self, parser):
        inputs = parser.add_mutually_exclusive_group()
        for mode in self.input_modes:
            inputs.add_argument(f'--{mode}', metavar='PATH',
                                help=self.input_help[mode])
        parser.add_argument('--config', metavar='FILE',
                            help='JSON file with option defaults.')
        if 'source' in self.input_modes:
            parser.add_argument('--lenient', action='store_true',
                                help='Skip malformed files with a warning.')
            parser.add_argument('--jobs', type=int, metavar='N',
                                help='Parse files on N threads.')
        self.add_options(parser)

    def add_options(self, parser):
        pass

    def add_kind_option(self, parser):
        parser.add_argument('--kind', action='append', choices=KIND_LABELS,
                            help='Graph kind, repeatable.')

    def add_pg_options(self, parser):
        parser.add_argument('--discount', choices=DISCOUNTS)
        parser.add_argument('--gamma', type=float)
        parser.add_argument('--dmax', type=int, metavar='N')

    def add_output_options(self, parser):
        parser.add_argument('--format', choices=FORMATS)
        parser.add_argument('--out', metavar='DIR',
                            help='Write every artefact into DIR.')

    def add_ranking_options(self, parser):
        parser.add_argument('--top', type=int, metavar='N')
        parser.add_argument('--key-percentile', type=float, metavar='P')
        parser.add_argument('--key-min-metrics', type=int, metavar='M')
        parser.add_argument('--self-ref-threshold', type=int, metavar='N')

    def add_smell_options(self, parser):
        parser.add_argument('--large-class', type=int, metavar='N')
        parser.add_argument('--long-method', type=int, metavar='N')
        parser.add_argument('--primitive-fraction', type=float, metavar='F')
        parser.add_argument('--primitive-min-attributes', type=int,
                            metavar='N')
        parser.add_argument('--constructors', type=int, metavar='N')

    def add_skip_option(self, parser):
        parser.add_argument('--skip', action='append', choices=SECTIONS,
                            help='Leave a report section out, repeatable.')

    def handle(self, *args, **options):
        self.options = options
        try:
            config = load_config(options)
            if config.input_mode not in self.input_modes:
                raise ConfigError('Give one of ' + ', '.join(
                    f'--{mode}' for mode in self.input_modes))
            self.run(config)
        except KeyClassError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code)

    def run(self, config):
        raise NotImplementedError

    def warn(self, message):
        self.stderr.write(self.style.WARNING(message))

    def load_model(self, config):
        model, warnings = builder.load_model(config)
        for warning in warnings:
            self.warn(f'Skipped {warning}')
        return model

    def emit(self, config, name, text):
        """Write an artefact to ``--out`` or, without it, to stdout."""
        if config.out is None:
            self.stdout.write(text, ending='')
            return None
        out_dir = Path(config.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / name
        path.write_text(text, encoding='utf-8')
        self.stdout.write(self.style.SUCCESS(f'Wrote {path}'))
        return path
