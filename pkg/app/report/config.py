"""
Analysis configuration: settings defaults < config file < flags.
"""
import json
import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Tuple

from django.conf import settings

from core.exceptions import ConfigError
from gain.engine import PGConfig
from ranking.keyclass import KeyClassConfig, PG_LABELS
from report.serializers import INPUT_MODES, AnalysisConfigSerializer
from smells.detectors import SmellThresholds

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalysisConfig:
    discount: str
    gamma: float
    dmax: int
    top: int
    key_percentile: float
    key_min_metrics: int
    self_ref_threshold: int
    large_class: int
    primitive_fraction: float
    primitive_min_attributes: int
    long_method: int
    constructors: int
    basic_types: Tuple[str, ...]
    format: str
    source: Optional[str] = None
    graph: Optional[str] = None
    model: Optional[str] = None
    kind: Tuple[str, ...] = ()
    out: Optional[str] = None
    lenient: bool = False
    jobs: int = 1
    skip: Tuple[str, ...] = ()

    @property
    def input_mode(self):
        for mode in INPUT_MODES:
            if getattr(self, mode):
                return mode
        return None

    @property
    def kinds(self):
        """Requested graph labels, defaulting to the three ranked ones."""
        return self.kind or PG_LABELS

    @property
    def pg_config(self):
        return PGConfig(self.discount, self.gamma, self.dmax)

    @property
    def key_config(self):
        return KeyClassConfig(self.key_percentile, self.key_min_metrics)

    @property
    def smell_thresholds(self):
        return SmellThresholds(
            large_class_methods=self.large_class,
            primitive_fraction=self.primitive_fraction,
            primitive_min_attributes=self.primitive_min_attributes,
            long_method_lines=self.long_method,
            constructors=self.constructors,
            basic_types=frozenset(self.basic_types),
        )


CONFIG_KEYS = frozenset(f.name for f in fields(AnalysisConfig))


def read_config_file(path):
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, ValueError) as exc:
        raise ConfigError(f'Cannot read config file {path}: {exc}')
    if not isinstance(data, dict):
        raise ConfigError(f'Config file {path} must hold a JSON object')
    data = {key.replace('-', '_'): value for key, value in data.items()}
    unknown = sorted(set(data) - CONFIG_KEYS)
    if unknown:
        raise ConfigError(f'Unknown config keys in {path}: '
                          f'{", ".join(unknown)}')
    return data


def _messages(detail):
    if isinstance(detail, dict):
        for value in detail.values():
            yield from _messages(value)
    elif isinstance(detail, (list, tuple)):
        for value in detail:
            yield from _messages(value)
    else:
        yield str(detail)


def load_config(options):
    """Merge settings, the optional ``config`` file and command options."""
    merged = dict(settings.KEYCLASS)
    if options.get('config'):
        merged.update(read_config_file(options['config']))
    for key, value in options.items():
        if key not in CONFIG_KEYS or value is None:
            continue
        if isinstance(value, (list, tuple)) and not value:
            continue
        if value is False and key == 'lenient':
            continue
        merged[key] = value

    serializer = AnalysisConfigSerializer(data=merged)
    if not serializer.is_valid():
        errors = '; '.join(
            f'{field}: {message}'
            for field, messages in serializer.errors.items()
            for message in _messages(messages)
        )
        raise ConfigError(f'Invalid configuration: {errors}')

    data = serializer.validated_data
    for key in ('kind', 'basic_types', 'skip'):
        data[key] = tuple(data[key])
    config = AnalysisConfig(**data)
    logger.debug('Analysis configuration: %s', config)
    return config
