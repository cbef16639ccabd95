"""
Ranking tables, their overlaps and percentile ranks.
"""
from bisect import bisect_left
from dataclasses import dataclass

from core.exceptions import ArgumentError


@dataclass(frozen=True)
class RankRow:
    rank: int
    node: str
    value: float


@dataclass(frozen=True)
class RankingTable:
    """Classes in descending value order, ties by ascending name."""
    metric: str
    rows: tuple

    @property
    def nodes(self):
        return [row.node for row in self.rows]

    def position(self, node):
        for row in self.rows:
            if row.node == node:
                return row.rank
        return None

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class OverlapRow:
    node: str
    position_a: int
    position_b: int


@dataclass(frozen=True)
class OverlapReport:
    metric_a: str
    metric_b: str
    rows: tuple

    @property
    def nodes(self):
        return [row.node for row in self.rows]


def rank(values, top_n=None, metric=''):
    """Rank ``values`` (node -> number); ``top_n=None`` keeps every row."""
    if top_n is not None and top_n < 1:
        raise ArgumentError('top_n must be >= 1')
    ordered = sorted(values.items(), key=lambda item: (-item[1], item[0]))
    if top_n is not None:
        ordered = ordered[:top_n]
    return RankingTable(
        metric=metric,
        rows=tuple(
            RankRow(position, node, value)
            for position, (node, value) in enumerate(ordered, start=1)
        ),
    )


def overlap(a, b):
    """Nodes in both tables with their positions, in the order of ``a``."""
    if len(a) != len(b):
        raise ArgumentError(
            f'Cannot overlap a top-{len(a)} table with a top-{len(b)} table'
        )
    positions = {row.node: row.rank for row in b.rows}
    return OverlapReport(
        metric_a=a.metric,
        metric_b=b.metric,
        rows=tuple(
            OverlapRow(row.node, row.rank, positions[row.node])
            for row in a.rows if row.node in positions
        ),
    )


def percentile(smaller, total):
    return 100.0 * smaller / total


def percentile_ranks(values):
    """Share of values strictly smaller than each node's, as a percentage."""
    if not values:
        raise ArgumentError('Percentile ranks need at least one value')
    ordered = sorted(values.values())
    total = len(ordered)
    return {
        node: percentile(bisect_left(ordered, value), total)
        for node, value in values.items()
    }
