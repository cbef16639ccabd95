"""
The analysis pipeline behind the management commands.

Every stage runs to completion before anything is rendered, so a failing
stage never leaves a partial report behind.
"""
import logging
from dataclasses import dataclass

from core.exceptions import ConfigError, InvariantViolation
from core.graphs import parse_kind, read_graph_file, transpose
from extractor.loader import parse_source_tree
from extractor.model import build_coupling_graph, build_model
from extractor.serializers import read_model_file
from gain.engine import potential_gain
from metrics.stats import (
    SummaryStats,
    build_graphs,
    check_degrees,
    collect_metrics,
    summarize,
)
from ranking.keyclass import (
    AGGREGATION,
    INHERITANCE,
    PG_LABELS,
    REVERSE_AGGREGATION,
    KeyClassReport,
    TKCReport,
    key_classes,
    tkc_flags,
)
from ranking.tables import overlap, rank
from smells.detectors import detect_smells

logger = logging.getLogger(__name__)

OVERLAP_PAIRS = (
    (REVERSE_AGGREGATION, AGGREGATION),
    (REVERSE_AGGREGATION, INHERITANCE),
)


def load_model(config):
    """The class model for ``--source`` or ``--model``; (model, warnings)."""
    if config.source:
        units, warnings = parse_source_tree(
            config.source, lenient=config.lenient, jobs=config.jobs)
        return build_model(units), tuple(warnings)
    if config.model:
        return read_model_file(config.model), ()
    raise ConfigError('This command needs --source DIR or --model FILE')


def graph_for(model, label, graphs=None):
    """The coupling graph for a label such as ``reverse-aggregation``."""
    kind, reversed_ = parse_kind(label)
    graph = graphs[kind] if graphs else build_coupling_graph(model, kind)
    return transpose(graph) if reversed_ else graph


def graph_file_for(path, label=None):
    """A graph read from an interchange file, transposed on request."""
    graph = read_graph_file(path)
    if label is None or label == graph.label:
        return graph
    kind, reversed_ = parse_kind(label)
    if kind != graph.kind:
        raise ConfigError(
            f'{path} holds a {graph.label} graph, cannot derive {label}')
    return transpose(graph)


def pg_results(model, labels, pg_config, graphs=None):
    return {
        label: potential_gain(graph_for(model, label, graphs), pg_config)
        for label in labels
    }


def rank_results(results, top):
    return {
        label: rank(result.pg, top, metric=label)
        for label, result in results.items()
    }


def overlaps_for(tables):
    return tuple(
        overlap(tables[a], tables[b]) for a, b in OVERLAP_PAIRS
        if a in tables and b in tables
    )


@dataclass(frozen=True)
class Report:
    config: object
    metrics: dict
    summary: SummaryStats
    results: dict
    rankings: tuple
    overlaps: tuple
    tkc: TKCReport
    key_report: KeyClassReport
    smells: tuple

    @property
    def class_count(self):
        return len(self.metrics)


def build_report(model, config):
    graphs = build_graphs(model)
    metrics = collect_metrics(model, graphs)
    check_degrees(metrics, graphs)
    summary = summarize(metrics)

    results = pg_results(model, PG_LABELS, config.pg_config, graphs)
    tables = rank_results(results, config.top)
    tkc = tkc_flags(
        model, graphs[AGGREGATION],
        normal_table=tables[AGGREGATION],
        reverse_table=tables[REVERSE_AGGREGATION],
        threshold=config.self_ref_threshold,
    )
    key_report = key_classes(metrics, results, config.key_config, tkc)
    for verdict in key_report.verdicts:
        if verdict.recompute(key_report.threshold,
                             config.key_min_metrics) != verdict.key:
            raise InvariantViolation(
                f'{verdict.node}: key verdict does not follow from its '
                f'percentiles'
            )

    smells = detect_smells(model, metrics, config.smell_thresholds)
    for finding in smells:
        if not finding.verdict():
            raise InvariantViolation(
                f'{finding.node}: {finding.smell} evidence does not hold')

    logger.info('Report over %d classes: %d key classes, %d smells',
                len(metrics), len(key_report.key_classes), len(smells))
    return Report(
        config=config,
        metrics=metrics,
        summary=summary,
        results=results,
        rankings=tuple(tables[label] for label in PG_LABELS),
        overlaps=overlaps_for(tables),
        tkc=tkc,
        key_report=key_report,
        smells=tuple(smells),
    )
