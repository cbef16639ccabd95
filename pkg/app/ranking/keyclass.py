"""
Key-class verdicts and tightly knit community (TKC) flags.

A class is KEY when its percentile reaches the threshold on at least
``min_metrics`` of the five key metrics. On a corpus of n classes no
percentile exceeds 100 * (n - 1) / n, so the threshold applied is the
smaller of that bound and the configured percentile.
"""
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Tuple

from core.exceptions import ArgumentError
from core.formatting import format_number
from ranking.tables import percentile, percentile_ranks

logger = logging.getLogger(__name__)

REVERSE_AGGREGATION = 'reverse-aggregation'
AGGREGATION = 'aggregation'
INHERITANCE = 'inheritance'
PG_LABELS = (REVERSE_AGGREGATION, AGGREGATION, INHERITANCE)
KEY_METRICS = PG_LABELS + ('methods', 'attributes')

DEFAULT_KEY_PERCENTILE = 99.0
DEFAULT_KEY_MIN_METRICS = 3
DEFAULT_SELF_REF_THRESHOLD = 5


@dataclass(frozen=True)
class KeyClassConfig:
    percentile: float = DEFAULT_KEY_PERCENTILE
    min_metrics: int = DEFAULT_KEY_MIN_METRICS

    def __post_init__(self):
        if not 0.0 <= self.percentile <= 100.0:
            raise ArgumentError('key percentile must lie in [0, 100]')
        if not 1 <= self.min_metrics <= len(KEY_METRICS):
            raise ArgumentError(
                f'key min metrics must lie in [1, {len(KEY_METRICS)}]'
            )

    def threshold(self, class_count):
        """Percentile threshold applied to a corpus of ``class_count``."""
        return min(self.percentile,
                   percentile(class_count - 1, class_count))


@dataclass(frozen=True)
class TKCEntry:
    node: str
    self_references: int
    in_both: bool


@dataclass(frozen=True)
class TKCReport:
    threshold: int
    entries: tuple

    @property
    def flagged(self):
        return {entry.node for entry in self.entries}

    @property
    def in_both(self):
        return [entry.node for entry in self.entries if entry.in_both]


@dataclass(frozen=True)
class KeyClassVerdict:
    node: str
    values: Mapping[str, float]
    percentiles: Mapping[str, float]
    passed: Tuple[str, ...]
    key: bool
    tkc: bool

    @property
    def evidence(self):
        return [
            f'{metric}: {format_number(self.values[metric])} '
            f'(percentile {format_number(self.percentiles[metric])})'
            for metric in self.passed
        ]

    def recompute(self, threshold, min_metrics):
        """The verdict implied by the stored percentiles alone."""
        passed = [metric for metric in KEY_METRICS
                  if self.percentiles[metric] >= threshold]
        return len(passed) >= min_metrics


@dataclass(frozen=True)
class KeyClassReport:
    config: KeyClassConfig
    threshold: float
    class_count: int
    verdicts: tuple
    tkc: TKCReport = None

    @property
    def key_classes(self):
        return [verdict for verdict in self.verdicts if verdict.key]

    def verdict(self, node):
        for verdict in self.verdicts:
            if verdict.node == node:
                return verdict
        raise KeyError(node)


def self_references(model, name):
    """Static fields of a class whose declared type is the class itself."""
    decl = model.classes[name]
    return sum(
        1 for field in decl.fields
        if field.is_static and field.type.dims == 0
        and model.resolve(name, field.type) == name
    )


def tkc_flags(model, aggregation_graph, normal_table=None,
              reverse_table=None, threshold=DEFAULT_SELF_REF_THRESHOLD):
    """Flag self-referencing constant clusters.

    A class is flagged when it has an aggregation self-loop and at least
    ``threshold`` static fields of its own type. ``in_both`` marks flagged
    classes found in both the normal and the reverse top tables.
    """
    if set(aggregation_graph.nodes) != set(model.classes):
        raise ArgumentError('Aggregation graph and model cover different '
                            'classes')
    top_normal = set(normal_table.nodes) if normal_table else set()
    top_reverse = set(reverse_table.nodes) if reverse_table else set()

    entries = []
    for name in aggregation_graph.nodes:
        if not aggregation_graph.has_self_loop(name):
            continue
        count = self_references(model, name)
        if count < threshold:
            continue
        in_both = name in top_normal and name in top_reverse
        entries.append(TKCEntry(name, count, in_both))
        logger.debug('TKC candidate %s with %d self references', name, count)
    return TKCReport(threshold=threshold, entries=tuple(entries))


def key_metric_values(metrics, pg_results):
    """Per key metric, the value of every class."""
    missing = [label for label in PG_LABELS if label not in pg_results]
    if missing:
        raise ArgumentError(f'Missing potential gain results: {missing}')
    names = set(metrics)
    for label in PG_LABELS:
        if set(pg_results[label].pg) != names:
            raise ArgumentError(
                f'{label} potential gain covers a different class set'
            )
    values = {label: dict(pg_results[label].pg) for label in PG_LABELS}
    values['methods'] = {name: row.methods for name, row in metrics.items()}
    values['attributes'] = {
        name: row.attributes for name, row in metrics.items()
    }
    return values


def key_classes(metrics, pg_results, config=None, tkc=None):
    """Apply the key-class rule to every class."""
    config = config or KeyClassConfig()
    if not metrics:
        raise ArgumentError('Key classes need at least one class')
    values = key_metric_values(metrics, pg_results)
    percentiles = {
        metric: percentile_ranks(values[metric]) for metric in KEY_METRICS
    }
    threshold = config.threshold(len(metrics))
    flagged = tkc.flagged if tkc else set()

    verdicts = []
    for name in sorted(metrics):
        row = MappingProxyType(
            {metric: percentiles[metric][name] for metric in KEY_METRICS}
        )
        passed = tuple(metric for metric in KEY_METRICS
                       if row[metric] >= threshold)
        verdicts.append(KeyClassVerdict(
            node=name,
            values=MappingProxyType(
                {metric: values[metric][name] for metric in KEY_METRICS}
            ),
            percentiles=row,
            passed=passed,
            key=len(passed) >= config.min_metrics,
            tkc=name in flagged,
        ))
    return KeyClassReport(
        config=config,
        threshold=threshold,
        class_count=len(metrics),
        verdicts=tuple(verdicts),
        tkc=tkc,
    )
