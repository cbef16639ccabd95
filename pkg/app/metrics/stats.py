"""
Countable class metrics and corpus summaries.
"""
import math
import statistics
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from core.exceptions import ArgumentError, InvariantViolation
from core.graphs import GRAPH_KINDS
from extractor.model import build_coupling_graph, count_members

SUMMARY_METRICS = (
    ('Methods', 'methods'),
    ('Attributes', 'attributes'),
    ('Depth', 'depth'),
    ('Constructors', 'constructors'),
)


@dataclass(frozen=True)
class ClassMetrics:
    name: str
    methods: int
    attributes: int
    constructors: int
    depth: int
    out_degree: Mapping[str, int]
    in_degree: Mapping[str, int]


@dataclass(frozen=True)
class SummaryRow:
    metric: str
    max: int
    median: int


@dataclass(frozen=True)
class SummaryStats:
    rows: tuple
    mean_constructors: float
    class_count: int

    def row(self, metric):
        for row in self.rows:
            if row.metric == metric:
                return row
        raise KeyError(metric)


def build_graphs(model, kinds=GRAPH_KINDS):
    return {kind: build_coupling_graph(model, kind) for kind in kinds}


def collect_metrics(model, graphs=None):
    """One ``ClassMetrics`` per model class, keyed by qualified name."""
    graphs = graphs or build_graphs(model)
    metrics = {}
    for name, decl in model.classes.items():
        counts = count_members(decl)
        metrics[name] = ClassMetrics(
            name=name,
            methods=counts.methods,
            attributes=counts.attributes,
            constructors=counts.constructors,
            depth=model.depth[name],
            out_degree=MappingProxyType({
                kind: len(graph.out_neighbors(name))
                for kind, graph in graphs.items()
            }),
            in_degree=MappingProxyType({
                kind: len(graph.in_neighbors(name))
                for kind, graph in graphs.items()
            }),
        )
    return metrics


def check_degrees(metrics, graphs):
    """Raise ``InvariantViolation`` when a degree disagrees with its graph."""
    for kind, graph in graphs.items():
        if set(graph.nodes) != set(metrics):
            raise InvariantViolation(
                f'{kind} graph and metrics cover different classes'
            )
        for name, row in metrics.items():
            expected = (len(graph.out_neighbors(name)),
                        len(graph.in_neighbors(name)))
            found = (row.out_degree.get(kind), row.in_degree.get(kind))
            if found != expected:
                raise InvariantViolation(
                    f'{name}: {kind} degrees {found} but the graph has '
                    f'{expected}'
                )


def summarize(metrics):
    """Max and lower median per metric plus mean constructors per class."""
    if not metrics:
        raise ArgumentError('Cannot summarize an empty corpus')
    rows = metrics.values()
    summary = []
    for label, attribute in SUMMARY_METRICS:
        values = [getattr(row, attribute) for row in rows]
        summary.append(SummaryRow(
            metric=label,
            max=max(values),
            median=statistics.median_low(values),
        ))
    mean = math.fsum(row.constructors for row in rows) / len(metrics)
    return SummaryStats(
        rows=tuple(summary),
        mean_constructors=mean,
        class_count=len(metrics),
    )
