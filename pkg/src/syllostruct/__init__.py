"""Deterministic validity checking for categorical syllogisms."""

from .core import (
    Figure,
    Malformed,
    Mood,
    MoodFigure,
    Proposition,
    PropositionForm,
    StructuredSyllogism,
    Syllogism,
    Term,
    Trivial,
    TrivialKind,
    ValidityVerdict,
)
from .oracle import brute_force_entails, entails, enumerate_forms, valid_forms
from .parsing import ParseFailure, emit_canonical, parse_canonical, parse_sentence
from .relevance import select_relevant
from .structure import StructureFailure, analyze
from .validity import (
    DEFAULT_CONFIG,
    VALIDITY_TABLE,
    VALIDITY_TABLE_NO_IMPORT,
    ValidityConfig,
    detect_trivial,
    judge,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "Figure",
    "Malformed",
    "Mood",
    "MoodFigure",
    "ParseFailure",
    "Proposition",
    "PropositionForm",
    "StructureFailure",
    "StructuredSyllogism",
    "Syllogism",
    "Term",
    "Trivial",
    "TrivialKind",
    "VALIDITY_TABLE",
    "VALIDITY_TABLE_NO_IMPORT",
    "ValidityConfig",
    "ValidityVerdict",
    "analyze",
    "brute_force_entails",
    "detect_trivial",
    "emit_canonical",
    "entails",
    "enumerate_forms",
    "judge",
    "parse_canonical",
    "parse_sentence",
    "select_relevant",
    "valid_forms",
]
