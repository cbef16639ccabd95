from report.builder import build_report
from report.commands import AnalysisCommand
from report.renderers import (
    render_csv,
    render_json,
    render_markdown,
    report_preamble,
    report_tables,
    write_csv_files,
)
from report.serializers import ReportSerializer


class Command(AnalysisCommand):
    help = ('Full key-class report: summary, rankings, overlaps, TKC '
            'flags, key classes and smells.')

    def add_options(self, parser):
        self.add_pg_options(parser)
        self.add_ranking_options(parser)
        self.add_smell_options(parser)
        self.add_output_options(parser)
        self.add_skip_option(parser)

    def run(self, config):
        report = build_report(self.load_model(config), config)

        if config.format == 'json':
            self.emit(config, 'report.json',
                      render_json(ReportSerializer(report).data))
        elif config.format == 'markdown':
            self.emit(config, 'report.md', render_markdown(
                report_tables(report), preamble=report_preamble(config)))
        elif config.out is None:
            self.stdout.write(render_csv(report_tables(report)), ending='')
        else:
            for path in write_csv_files(report_tables(report), config.out):
                self.stdout.write(self.style.SUCCESS(f'Wrote {path}'))
