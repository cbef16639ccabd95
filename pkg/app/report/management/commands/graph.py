from core.exceptions import ConfigError
from core.graphs import GRAPH_KINDS, format_graph, write_dot_file
from report.builder import graph_for
from report.commands import AnalysisCommand


class Command(AnalysisCommand):
    help = 'Write coupling graphs in the interchange format.'

    def add_options(self, parser):
        self.add_kind_option(parser)
        parser.add_argument('--dot', action='store_true',
                            help='Also write a .dot file per graph.')
        parser.add_argument('--out', metavar='DIR')

    def run(self, config):
        dot = self.options.get('dot', False)
        if dot and config.out is None:
            raise ConfigError('--dot needs --out DIR')
        model = self.load_model(config)

        graphs = [graph_for(model, label)
                  for label in config.kind or GRAPH_KINDS]
        if config.out is None:
            self.stdout.write(
                '\n'.join(format_graph(graph) for graph in graphs),
                ending='')
            return
        for graph in graphs:
            path = self.emit(config, f'{graph.label}.graph',
                             format_graph(graph))
            if dot:
                dot_path = path.with_suffix('.dot')
                write_dot_file(graph, dot_path)
                self.stdout.write(self.style.SUCCESS(f'Wrote {dot_path}'))
