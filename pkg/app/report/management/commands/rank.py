from metrics.stats import collect_metrics
from ranking.serializers import (
    OverlapReportSerializer,
    RankingTableSerializer,
)
from report.builder import overlaps_for, pg_results, rank_results
from report.commands import AnalysisCommand
from report.renderers import (
    overlap_table,
    pg_description,
    ranking_table,
    render_csv,
    render_json,
    render_markdown,
    write_csv_files,
)


class Command(AnalysisCommand):
    help = 'Rank classes by potential gain and list the table overlaps.'

    def add_options(self, parser):
        self.add_kind_option(parser)
        self.add_pg_options(parser)
        self.add_output_options(parser)
        parser.add_argument('--top', type=int, metavar='N')

    def run(self, config):
        model = self.load_model(config)
        results = pg_results(model, config.kinds, config.pg_config)
        tables = rank_results(results, config.top)
        overlaps = overlaps_for(tables)

        if config.format == 'json':
            self.emit(config, 'rankings.json', render_json({
                'rankings': [RankingTableSerializer(tables[label]).data
                             for label in config.kinds],
                'overlaps': OverlapReportSerializer(overlaps,
                                                    many=True).data,
            }))
            return

        metrics = collect_metrics(model)
        rendered = [ranking_table(tables[label], metrics)
                    for label in config.kinds]
        rendered += [overlap_table(report) for report in overlaps]
        if config.format == 'markdown':
            self.emit(config, 'rankings.md', render_markdown(
                rendered, title='Rankings',
                preamble=(pg_description(config.pg_config),)))
        elif config.out is None:
            self.stdout.write(render_csv(rendered), ending='')
        else:
            for path in write_csv_files(rendered, config.out):
                self.stdout.write(self.style.SUCCESS(f'Wrote {path}'))
