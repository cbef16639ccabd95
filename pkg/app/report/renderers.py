"""
Markdown, CSV and JSON output.

Tables are built once as rows of display strings; Markdown and CSV both
print those strings so every number reads the same in either twin.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Tuple

from core.formatting import format_number
from gain.engine import DECAY
from ranking.keyclass import KEY_METRICS

REPORT_TITLE = 'Key class report'
COUNTING_NOTE = ('Attribute counts: declared fields only; enum constants '
                 'count as static fields of their enum')
CLASS_COLUMNS = ('Methods', 'Attributes', 'Constructors', 'Depth')


@dataclass(frozen=True)
class Table:
    name: str
    title: str
    header: Tuple[str, ...]
    rows: tuple
    notes: Tuple[str, ...] = field(default=())


def _cells(*values):
    return tuple(
        value if isinstance(value, str) else format_number(value)
        for value in values
    )


def summary_tables(summary):
    return [
        Table('summary', 'Summary', ('Metric', 'Max', 'Median'), tuple(
            _cells(row.metric, row.max, row.median) for row in summary.rows
        )),
        Table('statistics', 'Statistics', ('Statistic', 'Value'), (
            _cells('Classes', summary.class_count),
            _cells('Mean constructors per class',
                   f'{summary.mean_constructors:.3f}'),
        )),
    ]


def ranking_table(table, metrics):
    rows = []
    for row in table.rows:
        facts = metrics[row.node]
        rows.append(_cells(row.rank, row.node, row.value, facts.methods,
                           facts.attributes, facts.constructors,
                           facts.depth))
    return Table(
        f'ranking-{table.metric}',
        f'Top {len(table)} classes by {table.metric} PG',
        ('Rank', 'Classname', 'PG') + CLASS_COLUMNS,
        tuple(rows),
    )


def overlap_table(report):
    a, b = report.metric_a, report.metric_b
    return Table(
        f'overlap-{a}-{b}',
        f'Overlap of {a} PG and {b} PG',
        ('Classname', a, b),
        tuple(_cells(row.node, row.position_a, row.position_b)
              for row in report.rows),
    )


def tkc_table(tkc):
    return Table(
        'tkc',
        'Tightly knit communities',
        ('Classname', 'Static self references', 'In both top tables'),
        tuple(_cells(entry.node, entry.self_references, entry.in_both)
              for entry in tkc.entries),
        notes=(f'Self-reference threshold: {tkc.threshold}',),
    )


def key_class_table(key_report):
    rows = tuple(
        _cells(verdict.node,
               *(verdict.percentiles[metric] for metric in KEY_METRICS),
               ', '.join(verdict.passed), verdict.tkc)
        for verdict in key_report.key_classes
    )
    note = (
        f'Percentile threshold: {format_number(key_report.threshold)} '
        f'(requested {format_number(key_report.config.percentile)}, '
        f'{key_report.class_count} classes); minimum metrics: '
        f'{key_report.config.min_metrics}'
    )
    return Table('key-classes', 'Key classes',
                 ('Classname',) + KEY_METRICS + ('Passed', 'TKC'),
                 rows, notes=(note,))


def evidence_text(finding):
    return '; '.join(
        f'{item.name} {format_number(item.shown)} >= '
        f'{format_number(item.threshold)}'
        for item in finding.evidence
    )


def smell_table(findings):
    return Table(
        'smells',
        'Smells',
        ('Classname', 'Smell', 'Member', 'Evidence', 'Refactorings'),
        tuple(
            _cells(f.node, f.smell, f.member, evidence_text(f),
                   ', '.join(f.refactorings))
            for f in findings
        ),
    )


def pg_table(result):
    depths = range(1, result.truncated_at + 1)
    return Table(
        f'pg-{result.label}',
        f'Potential gain over {result.label}',
        ('Node', 'PG') + tuple(f'R_{d}' for d in depths),
        tuple(_cells(row['node'], row['pg'], *row['r'])
              for row in result.node_rows),
        notes=(f'Truncated at depth {result.truncated_at}',),
    )


def report_tables(report):
    """(section, table) pairs of a full report, skipped sections left out."""
    skip = set(report.config.skip)
    sections = []
    if 'summary' not in skip:
        sections += [('summary', t) for t in summary_tables(report.summary)]
    if 'rankings' not in skip:
        sections += [('rankings', ranking_table(t, report.metrics))
                     for t in report.rankings]
    if 'overlaps' not in skip:
        sections += [('overlaps', overlap_table(o)) for o in report.overlaps]
    if 'tkc' not in skip:
        sections.append(('tkc', tkc_table(report.tkc)))
    if 'key-classes' not in skip:
        sections.append(('key-classes', key_class_table(report.key_report)))
    if 'smells' not in skip:
        sections.append(('smells', smell_table(report.smells)))
    return [table for _, table in sections]


def pg_description(pg_config):
    if pg_config.discount == DECAY:
        discount = f'decay discount (gamma {format_number(pg_config.gamma)})'
    else:
        discount = 'reciprocal discount'
    return f'Potential gain: {discount}, d_max {pg_config.d_max}'


def report_preamble(config):
    return (pg_description(config.pg_config), COUNTING_NOTE)


def _markdown_row(cells):
    return '| ' + ' | '.join(cells) + ' |'


def markdown_table(table):
    lines = [f'## {table.title}', '']
    for note in table.notes:
        lines += [note, '']
    if not table.rows:
        lines.append('None.')
        return lines
    lines.append(_markdown_row(table.header))
    lines.append(_markdown_row(['---'] * len(table.header)))
    lines.extend(_markdown_row(row) for row in table.rows)
    return lines


def render_markdown(tables, title=REPORT_TITLE, preamble=()):
    lines = [f'# {title}', '']
    if preamble:
        lines += list(preamble) + ['']
    for table in tables:
        lines += markdown_table(table) + ['']
    return '\n'.join(lines).rstrip('\n') + '\n'


def csv_text(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(table.header)
    writer.writerows(table.rows)
    return buffer.getvalue()


def render_csv(tables):
    """Every table as CSV, each preceded by a ``# name`` line."""
    return '\n'.join(f'# {table.name}\n{csv_text(table)}'
                     for table in tables)


def write_csv_files(tables, out_dir):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for table in tables:
        path = out_dir / f'{table.name}.csv'
        path.write_text(csv_text(table), encoding='utf-8')
        paths.append(path)
    return paths


def render_json(data):
    return json.dumps(data, indent=2) + '\n'
