import io
import time

from gain.engine import potential_gain
from gain.serializers import result_to_json, write_result_csv
from report.builder import graph_file_for, graph_for
from report.commands import AnalysisCommand
from report.renderers import (
    pg_description,
    pg_table,
    render_json,
    render_markdown,
)

EXTENSIONS = {'markdown': 'md', 'csv': 'csv', 'json': 'json'}


class Command(AnalysisCommand):
    help = 'Compute potential gain for every class of each requested graph.'
    input_modes = ('source', 'model', 'graph')

    def add_options(self, parser):
        self.add_kind_option(parser)
        self.add_pg_options(parser)
        self.add_output_options(parser)

    def graphs(self, config):
        if config.graph:
            labels = config.kind or (None,)
            return [graph_file_for(config.graph, label) for label in labels]
        model = self.load_model(config)
        return [graph_for(model, label) for label in config.kinds]

    def render(self, config, result):
        if config.format == 'csv':
            buffer = io.StringIO()
            write_result_csv(result, buffer)
            return buffer.getvalue()
        if config.format == 'json':
            return render_json(result_to_json(result))
        return render_markdown(
            [pg_table(result)],
            title=f'Potential gain: {result.label}',
            preamble=(pg_description(config.pg_config),),
        )

    def run(self, config):
        results = []
        for graph in self.graphs(config):
            started = time.perf_counter()
            result = potential_gain(graph, config.pg_config)
            elapsed = time.perf_counter() - started
            self.stderr.write(
                f'{result.label}: {len(graph)} nodes, '
                f'{graph.number_of_edges()} edges in {elapsed:.3f} s')
            results.append(result)

        if config.out is not None:
            for result in results:
                name = f'pg-{result.label}.{EXTENSIONS[config.format]}'
                self.emit(config, name, self.render(config, result))
        elif config.format == 'json' and len(results) > 1:
            self.stdout.write(render_json(
                [result_to_json(result) for result in results]), ending='')
        elif len(results) > 1:
            self.stdout.write('\n'.join(
                f'# pg-{result.label}\n{self.render(config, result)}'
                for result in results), ending='')
        else:
            self.stdout.write(self.render(config, results[0]), ending='')
