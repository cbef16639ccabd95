"""
Bad-smell detectors and the refactorings they suggest.

Every finding carries its measured values next to the thresholds they
were compared with, so the verdict can be recomputed from the finding.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from core.exceptions import ArgumentError
from core.formatting import floor_decimals
from extractor.declarations import PRIMITIVE_TYPES

LARGE_CLASS = 'LargeClass'
PRIMITIVE_OBSESSION = 'PrimitiveObsession'
LONG_METHOD = 'LongMethod'
MULTIPLE_CONSTRUCTORS = 'MultipleConstructors'
SMELLS = (LARGE_CLASS, PRIMITIVE_OBSESSION, LONG_METHOD,
          MULTIPLE_CONSTRUCTORS)

EXTRACT_CLASS = 'Extract Class'
EXTRACT_SUBCLASS = 'Extract Subclass'
EXTRACT_METHOD = 'Extract Method'
MOVE_FIELD = 'Move Field'
CREATION_METHODS = 'Replace Constructors with Creation Methods'

REFACTORINGS = {
    LARGE_CLASS: (EXTRACT_CLASS, EXTRACT_SUBCLASS),
    PRIMITIVE_OBSESSION: (EXTRACT_CLASS, MOVE_FIELD),
    LONG_METHOD: (EXTRACT_METHOD,),
    MULTIPLE_CONSTRUCTORS: (CREATION_METHODS,),
}

BOXED_TYPES = frozenset({
    'Boolean', 'Byte', 'Character', 'Short', 'Integer', 'Long', 'Float',
    'Double',
})
DEFAULT_BASIC_TYPES = PRIMITIVE_TYPES | BOXED_TYPES | {'String'}


@dataclass(frozen=True)
class Evidence:
    """A measured value compared against its threshold with ``>=``."""
    name: str
    value: float
    threshold: float
    decimals: Optional[int] = None

    @property
    def shown(self):
        if self.decimals is None:
            return self.value
        return floor_decimals(self.value, self.decimals)

    @property
    def passed(self):
        return self.value >= self.threshold


@dataclass(frozen=True)
class SmellFinding:
    node: str
    smell: str
    evidence: Tuple[Evidence, ...]
    member: str = ''
    refactorings: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.refactorings:
            object.__setattr__(self, 'refactorings', REFACTORINGS[self.smell])

    def verdict(self):
        return all(item.passed for item in self.evidence)

    @property
    def sort_key(self):
        return self.node, self.smell, self.member


@dataclass(frozen=True)
class SmellThresholds:
    large_class_methods: int = 50
    primitive_fraction: float = 0.8
    primitive_min_attributes: int = 15
    long_method_lines: int = 50
    constructors: int = 3
    basic_types: frozenset = DEFAULT_BASIC_TYPES

    def __post_init__(self):
        if not self.basic_types:
            raise ArgumentError('basic types list must not be empty')
        if not 0.0 < self.primitive_fraction <= 1.0:
            raise ArgumentError('primitive fraction must lie in (0, 1]')
        for name in ('large_class_methods', 'primitive_min_attributes',
                     'long_method_lines', 'constructors'):
            if getattr(self, name) < 0:
                raise ArgumentError(f'{name} must be >= 0')


def detect_large_class(metrics, threshold=50):
    return [
        SmellFinding(name, LARGE_CLASS,
                     (Evidence('methods', row.methods, threshold),))
        for name, row in sorted(metrics.items())
        if row.methods >= threshold
    ]


def is_basic(type_ref, basic_types=DEFAULT_BASIC_TYPES):
    """Primitive or basic system type, arrays and generics excluded."""
    if type_ref.dims or type_ref.args:
        return False
    qualified = type_ref.name == f'java.lang.{type_ref.simple_name}'
    return type_ref.name in basic_types or (
        qualified and type_ref.simple_name in basic_types)


def detect_primitive_obsession(model, threshold=0.8, min_attributes=15,
                               basic_types=DEFAULT_BASIC_TYPES):
    if not basic_types:
        raise ArgumentError('basic types list must not be empty')
    findings = []
    for name, decl in model.classes.items():
        attributes = len(decl.fields)
        if attributes < min_attributes or not attributes:
            continue
        basic = sum(1 for f in decl.fields if is_basic(f.type, basic_types))
        fraction = basic / attributes
        if fraction >= threshold:
            findings.append(SmellFinding(name, PRIMITIVE_OBSESSION, (
                Evidence('attributes', attributes, min_attributes),
                Evidence('basic fraction', fraction, threshold, decimals=3),
            )))
    return findings


def detect_long_methods(model, threshold=50):
    findings = []
    for name, decl in model.classes.items():
        for method in decl.methods:
            if method.body_line_count >= threshold:
                findings.append(SmellFinding(
                    name, LONG_METHOD,
                    (Evidence('body lines', method.body_line_count,
                              threshold),),
                    member=method.name,
                ))
    return findings


def detect_constructor_candidates(metrics, threshold=3):
    return [
        SmellFinding(name, MULTIPLE_CONSTRUCTORS,
                     (Evidence('constructors', row.constructors, threshold),))
        for name, row in sorted(metrics.items())
        if row.constructors >= threshold
    ]


def count_constructor_candidates(constructor_counts, threshold=3):
    """How many entries of a constructor column reach ``threshold``."""
    return sum(1 for count in constructor_counts if count >= threshold)


def detect_smells(model, metrics, thresholds=None):
    """All four detectors, ordered by (class, smell, member)."""
    thresholds = thresholds or SmellThresholds()
    findings = (
        detect_large_class(metrics, thresholds.large_class_methods)
        + detect_primitive_obsession(
            model,
            thresholds.primitive_fraction,
            thresholds.primitive_min_attributes,
            thresholds.basic_types,
        )
        + detect_long_methods(model, thresholds.long_method_lines)
        + detect_constructor_candidates(metrics, thresholds.constructors)
    )
    return sorted(findings, key=lambda finding: finding.sort_key)
