"""
Potential gain over a coupling graph.

R_0(n) = 1 and, for d >= 1,

    R_d(n) = sum(R_{d-1}(y) for y in Out(n)) / sum(R_{d-1}(j) for j in N)

Pg(n) is the discounted sum of R_1..R_dmax. Nodes are indexed in sorted
name order; the sweep is a sparse matrix-vector product per depth.
"""
import logging
import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from core.exceptions import ArgumentError

logger = logging.getLogger(__name__)

RECIPROCAL = 'reciprocal'
DECAY = 'decay'
DISCOUNTS = (RECIPROCAL, DECAY)

DEFAULT_D_MAX = 15
DEFAULT_GAMMA = 0.5


@dataclass(frozen=True)
class PGConfig:
    discount: str = RECIPROCAL
    gamma: float = DEFAULT_GAMMA
    d_max: int = DEFAULT_D_MAX

    def __post_init__(self):
        if self.discount not in DISCOUNTS:
            raise ArgumentError(f'Unknown discount: {self.discount!r}')
        if not 0.0 < self.gamma < 1.0:
            raise ArgumentError('gamma must lie in the open interval (0, 1)')
        if isinstance(self.d_max, bool) or not isinstance(self.d_max, int) \
                or self.d_max < 1:
            raise ArgumentError('d_max must be an integer >= 1')


@dataclass(frozen=True)
class PGResult:
    """R table and potential gain for every node of one graph.

    ``r_table[d]`` maps node -> R_d for d in 0..truncated_at.
    """
    label: str
    config: PGConfig
    nodes: tuple
    r_table: tuple
    pg: dict
    truncated_at: int = 0

    def r(self, depth, node):
        if node not in self.pg:
            raise KeyError(node)
        if depth > self.truncated_at:
            return 0.0
        return self.r_table[depth][node]

    def recompute_pg(self):
        """Pg re-derived from the stored R table."""
        recomputed = {}
        for node in self.nodes:
            total = 0.0
            for depth in range(1, self.truncated_at + 1):
                total += self.r_table[depth][node] * discount(self.config,
                                                              depth)
            recomputed[node] = total
        return recomputed

    @property
    def node_rows(self):
        """One row per node: name, Pg and R_1..R_truncated_at."""
        return [
            {
                'node': node,
                'pg': self.pg[node],
                'r': [self.r_table[depth][node]
                      for depth in range(1, self.truncated_at + 1)],
            }
            for node in self.nodes
        ]

    def scaled(self, factor):
        """Same result with every Pg multiplied by ``factor``."""
        if factor <= 0:
            raise ArgumentError('scale factor must be positive')
        return PGResult(
            label=self.label,
            config=self.config,
            nodes=self.nodes,
            r_table=self.r_table,
            pg={node: value * factor for node, value in self.pg.items()},
            truncated_at=self.truncated_at,
        )


def discount(config, depth):
    """f(d): 1/d for reciprocal, gamma**d for decay."""
    if depth < 1:
        raise ArgumentError('The discount is only defined for depth >= 1')
    if config.discount == RECIPROCAL:
        return 1.0 / depth
    return config.gamma ** depth


def _adjacency(graph):
    matrix = nx.to_scipy_sparse_array(
        graph.digraph,
        nodelist=list(graph.nodes),
        weight=None,
        dtype=float,
        format='csr',
    )
    matrix.sort_indices()
    return matrix


def _sweep(graph, d_max):
    if len(graph) == 0:
        raise ArgumentError('Potential gain needs a non-empty graph')

    adjacency = _adjacency(graph)
    previous = np.ones(len(graph))
    rows = [previous]

    for depth in range(1, d_max + 1):
        current = adjacency.dot(previous) / math.fsum(previous)
        if not current.any():
            logger.debug('%s: no walks of length %d, stopping',
                         graph.label, depth)
            break
        rows.append(current)
        previous = current

    return rows


def compute_r(graph, d_max=DEFAULT_D_MAX):
    """R_d for d in 0..truncated_at, one dict per depth.

    The sweep stops at the first depth whose R values are all zero; no
    later depth can carry any mass.
    """
    if d_max < 1:
        raise ArgumentError('d_max must be >= 1')
    rows = _sweep(graph, d_max)
    return tuple(
        dict(zip(graph.nodes, (float(v) for v in row))) for row in rows
    )


def potential_gain(graph, config=None):
    config = config or PGConfig()
    rows = _sweep(graph, config.d_max)

    gain = np.zeros(len(graph))
    for depth in range(1, len(rows)):
        gain += rows[depth] * discount(config, depth)

    truncated_at = len(rows) - 1
    logger.debug('%s: potential gain over %d nodes, truncated at %d',
                 graph.label, len(graph), truncated_at)
    return PGResult(
        label=graph.label,
        config=config,
        nodes=graph.nodes,
        r_table=tuple(
            dict(zip(graph.nodes, (float(v) for v in row))) for row in rows
        ),
        pg=dict(zip(graph.nodes, (float(v) for v in gain))),
        truncated_at=truncated_at,
    )
