"""Domain vocabulary shared by every stage of the pipeline.

All values are immutable. Construction validates invariants and raises
``ValueError`` on violation; there is no other behaviour here.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import FrozenSet, Tuple, Union

_WS = re.compile(r"\s+")


def normalize_term_text(text: str) -> str:
    """Lowercase, trim and collapse internal whitespace."""
    return _WS.sub(" ", text.lower()).strip()


class PropositionForm(str, enum.Enum):
    """The four categorical forms."""

    A = "A"  # all S are P
    E = "E"  # no S are P
    I = "I"  # some S are P
    O = "O"  # some S are not P

    @property
    def universal(self) -> bool:
        return self in (PropositionForm.A, PropositionForm.E)

    @property
    def particular(self) -> bool:
        return not self.universal

    @property
    def negative(self) -> bool:
        return self in (PropositionForm.E, PropositionForm.O)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Term:
    """A normalized category name.

    Equality is literal string equality after normalization; no stemming or
    singular/plural merging is attempted.
    """

    text: str

    def __post_init__(self):
        if not isinstance(self.text, str):
            raise TypeError(f"term text must be str, got {type(self.text).__name__}")
        norm = normalize_term_text(self.text)
        if not norm:
            raise ValueError("term must be non-empty")
        object.__setattr__(self, "text", norm)

    def __str__(self) -> str:
        return self.text


def _as_term(value: Union[Term, str]) -> Term:
    return value if isinstance(value, Term) else Term(value)


@dataclass(frozen=True)
class Proposition:
    """One categorical statement ``(form, subject, predicate)``.

    Plain strings are accepted for the terms and wrapped in :class:`Term`.
    Identity statements such as ``all x are x`` are representable.
    """

    form: PropositionForm
    subject: Term
    predicate: Term

    def __post_init__(self):
        object.__setattr__(self, "form", PropositionForm(self.form))
        object.__setattr__(self, "subject", _as_term(self.subject))
        object.__setattr__(self, "predicate", _as_term(self.predicate))

    @property
    def terms(self) -> Tuple[Term, Term]:
        return (self.subject, self.predicate)

    def rename(self, mapping) -> "Proposition":
        """Apply a term renaming (a mapping ``Term -> Term`` or ``str -> str``)."""
        return Proposition(self.form, _lookup(mapping, self.subject), _lookup(mapping, self.predicate))

    def __str__(self) -> str:
        s, p = self.subject.text, self.predicate.text
        return {
            PropositionForm.A: f"all {s} are {p}",
            PropositionForm.E: f"no {s} are {p}",
            PropositionForm.I: f"some {s} are {p}",
            PropositionForm.O: f"some {s} are not {p}",
        }[self.form]


def _lookup(mapping, term: Term) -> Term:
    if term in mapping:
        return _as_term(mapping[term])
    if term.text in mapping:
        return _as_term(mapping[term.text])
    return term


@dataclass(frozen=True)
class Syllogism:
    """Ordered premises followed by one conclusion. Premise order is significant."""

    premises: Tuple[Proposition, ...]
    conclusion: Proposition

    def __post_init__(self):
        premises = tuple(self.premises)
        if not premises:
            raise ValueError("a syllogism needs at least one premise")
        object.__setattr__(self, "premises", premises)

    @property
    def propositions(self) -> Tuple[Proposition, ...]:
        return self.premises + (self.conclusion,)

    def terms(self) -> Tuple[Term, ...]:
        """Distinct terms in order of first appearance."""
        seen = {}
        for prop in self.propositions:
            for t in prop.terms:
                seen.setdefault(t, None)
        return tuple(seen)

    def rename(self, mapping) -> "Syllogism":
        return Syllogism(tuple(p.rename(mapping) for p in self.premises), self.conclusion.rename(mapping))


@dataclass(frozen=True)
class Mood:
    """Forms of the major premise, minor premise and conclusion, in that order."""

    major: PropositionForm
    minor: PropositionForm
    conclusion: PropositionForm

    def __post_init__(self):
        for name in ("major", "minor", "conclusion"):
            object.__setattr__(self, name, PropositionForm(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "Mood":
        if len(text) != 3:
            raise ValueError(f"mood must be three letters, got {text!r}")
        return cls(*(PropositionForm(ch) for ch in text.upper()))

    def __str__(self) -> str:
        return f"{self.major.value}{self.minor.value}{self.conclusion.value}"


class Figure(enum.IntEnum):
    """Position of the middle term across the premises.

    1: M-P / S-M, 2: P-M / S-M, 3: M-P / M-S, 4: P-M / M-S.
    """

    FIRST = 1
    SECOND = 2
    THIRD = 3
    FOURTH = 4


@dataclass(frozen=True)
class StructuredSyllogism:
    """A two-premise syllogism with its term roles, mood and figure resolved."""

    source: Syllogism
    minor_term: Term
    major_term: Term
    middle_term: Term
    major_index: int
    minor_index: int
    mood: Mood
    figure: Figure

    def __post_init__(self):
        if len(self.source.premises) != 2:
            raise ValueError("structured syllogisms have exactly two premises")
        roles = {self.minor_term, self.major_term, self.middle_term}
        if len(roles) != 3:
            raise ValueError("minor, major and middle terms must be pairwise distinct")
        if {self.major_index, self.minor_index} != {0, 1}:
            raise ValueError("major_index and minor_index must be 0 and 1 in some order")
        major = self.source.premises[self.major_index]
        minor = self.source.premises[self.minor_index]
        if self.major_term not in major.terms:
            raise ValueError("major premise must contain the major term")
        if self.minor_term not in minor.terms:
            raise ValueError("minor premise must contain the minor term")
        if self.middle_term not in major.terms or self.middle_term not in minor.terms:
            raise ValueError("middle term must occur in both premises")
        if self.middle_term in self.source.conclusion.terms:
            raise ValueError("middle term must not occur in the conclusion")
        object.__setattr__(self, "figure", Figure(self.figure))

    # S / P / M aliases read naturally next to textbook notation
    @property
    def S(self) -> Term:
        return self.minor_term

    @property
    def P(self) -> Term:
        return self.major_term

    @property
    def M(self) -> Term:
        return self.middle_term


class TrivialKind(str, enum.Enum):
    PETITIO_PRINCIPII = "petitio_principii"
    CONVERSION_E = "conversion_e"
    CONVERSION_I = "conversion_i"
    SUBALTERNATION_AI = "subalternation_ai"
    SUBALTERNATION_EO = "subalternation_eo"
    EXPLOSION = "explosion"

    @property
    def label(self) -> str:
        return self.value.replace("_", " ")


@dataclass(frozen=True)
class MoodFigure:
    mood: Mood
    figure: Figure

    def __str__(self) -> str:
        return f"{self.mood}-{int(self.figure)}"


@dataclass(frozen=True)
class Trivial:
    kind: TrivialKind

    def __str__(self) -> str:
        return f"trivial: {self.kind.label}"


@dataclass(frozen=True)
class Malformed:
    reason: str

    def __str__(self) -> str:
        return f"malformed: {self.reason}"


Basis = Union[MoodFigure, Trivial, Malformed]


@dataclass(frozen=True)
class ValidityVerdict:
    valid: bool
    basis: Basis

    def __post_init__(self):
        if isinstance(self.basis, Malformed) and self.valid:
            raise ValueError("a malformed argument cannot be valid")
        if isinstance(self.basis, Trivial) and not self.valid:
            raise ValueError("a trivial basis always means valid")

    @property
    def basis_kind(self) -> str:
        return type(self.basis).__name__

    def __str__(self) -> str:
        return f"{'valid' if self.valid else 'invalid'} ({self.basis})"


# 0-based premise indices; empty for invalid arguments.
RelevanceSet = FrozenSet[int]
