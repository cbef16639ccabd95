"""
Parse every ``*.java`` file below a source root.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from core.exceptions import ConfigError, EmptyInputError, SourceParseError
from extractor.parser import parse_compilation_unit

logger = logging.getLogger(__name__)

SOURCE_GLOB = '*.java'


def find_sources(root):
    root = Path(root)
    if not root.is_dir():
        raise ConfigError(f'Source root {root} is not a directory')
    return sorted(path for path in root.rglob(SOURCE_GLOB) if path.is_file())


def _parse_file(root, path):
    relative = path.relative_to(root).as_posix()
    try:
        source = path.read_text(encoding='utf-8')
    except UnicodeDecodeError as exc:
        return None, SourceParseError(f'not valid UTF-8 ({exc.reason})',
                                      relative)
    try:
        return parse_compilation_unit(source, relative), None
    except SourceParseError as exc:
        return None, exc


def parse_source_tree(root, lenient=False, jobs=1):
    """Parse a source tree; returns (units, warnings).

    In strict mode the first malformed file (in path order) aborts the
    run. Under ``lenient`` it is skipped and reported as a warning.
    """
    root = Path(root)
    paths = find_sources(root)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda p: _parse_file(root, p), paths))
    else:
        outcomes = [_parse_file(root, path) for path in paths]

    units = []
    warnings = []
    for unit, error in outcomes:
        if error is None:
            units.append(unit)
            continue
        if not lenient:
            raise error
        logger.warning('Skipping %s', error)
        warnings.append(str(error))

    if not units:
        raise EmptyInputError(f'No parseable {SOURCE_GLOB} files under {root}')
    logger.info('Parsed %d of %d source files under %s',
                len(units), len(paths), root)
    return units, warnings
