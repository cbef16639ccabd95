from metrics.stats import collect_metrics
from report.commands import AnalysisCommand
from report.renderers import (
    csv_text,
    render_json,
    render_markdown,
    smell_table,
)
from smells.detectors import detect_smells
from smells.serializers import SmellFindingSerializer


class Command(AnalysisCommand):
    help = 'List bad-smell findings with their suggested refactorings.'

    def add_options(self, parser):
        self.add_smell_options(parser)
        self.add_output_options(parser)

    def run(self, config):
        model = self.load_model(config)
        findings = detect_smells(model, collect_metrics(model),
                                 config.smell_thresholds)

        if config.format == 'json':
            self.emit(config, 'smells.json', render_json(
                SmellFindingSerializer(findings, many=True).data))
        elif config.format == 'csv':
            self.emit(config, 'smells.csv', csv_text(smell_table(findings)))
        else:
            self.emit(config, 'smells.md', render_markdown(
                [smell_table(findings)], title='Smells'))
