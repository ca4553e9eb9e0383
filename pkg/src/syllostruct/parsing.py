"""Deterministic parsing of canonical categorical sentences.

Canonical input looks like ``"All B are A. All C are A. All C are B."``:
sentences separated by periods, each one of the four standard patterns.
"""

from __future__ import annotations

import enum
import re
from typing import Iterable, List

from .core import Proposition, PropositionForm, Syllogism, Term

CONNECTORS = ("therefore", "thus", "hence", "so")

_WS = re.compile(r"\s+")
_IS = re.compile(r"\bis\b")
_CONNECTOR = re.compile(r"^(?:%s)\b\s*,?\s*" % "|".join(CONNECTORS))

# Checked in this order; O precedes I so that "are not" is never read as I.
PATTERNS = (
    (PropositionForm.A, "all", " are "),
    (PropositionForm.E, "no", " are "),
    (PropositionForm.O, "some", " are not "),
    (PropositionForm.I, "some", " are "),
)

_RENDER = {
    PropositionForm.A: "all {} are {}",
    PropositionForm.E: "no {} are {}",
    PropositionForm.I: "some {} are {}",
    PropositionForm.O: "some {} are not {}",
}


class FailureKind(str, enum.Enum):
    NOT_AEIO = "NotAEIO"
    WRONG_SENTENCE_COUNT = "WrongSentenceCount"
    EMPTY_TERM = "EmptyTerm"


class ParseFailure(ValueError):
    """Raised when text cannot be read as canonical categorical form.

    ``offending_text`` is the exact fragment that failed; ``found`` is set
    for sentence-count failures.
    """

    def __init__(self, kind: FailureKind, offending_text: str, found: int | None = None):
        self.kind = FailureKind(kind)
        self.offending_text = offending_text
        self.found = found
        detail = f"{self.kind.value}({found})" if found is not None else self.kind.value
        super().__init__(f"{detail}: {offending_text!r}")


def normalize_surface(text: str) -> str:
    """Apply the surface clean-up that precedes pattern matching.

    >>> normalize_surface("Therefore, All C are B.")
    'all c are b'
    """
    s = _WS.sub(" ", text.lower()).strip()
    s = s.rstrip(". ").strip()
    s = _IS.sub("are", s)
    s = _CONNECTOR.sub("", s, count=1)
    return s.strip()


def match_aeio(sentence: str) -> Proposition:
    """Match one normalized sentence against the four categorical patterns.

    The subject is everything between the quantifier and the *last*
    separator; the predicate is what follows it.
    """
    for form, quantifier, sep in PATTERNS:
        if sentence != quantifier and not sentence.startswith(quantifier + " "):
            continue
        # pad so a separator touching either edge still registers (empty terms)
        body = " " + sentence[len(quantifier) + 1:] + " "
        at = body.rfind(sep)
        if at < 0:
            continue
        subject = body[:at].strip()
        predicate = body[at + len(sep):].strip()
        if not subject or not predicate:
            raise ParseFailure(FailureKind.EMPTY_TERM, sentence)
        return Proposition(form, Term(subject), Term(predicate))
    raise ParseFailure(FailureKind.NOT_AEIO, sentence)


def parse_sentence(text: str) -> Proposition:
    return match_aeio(normalize_surface(text))


def split_sentences(text: str) -> List[str]:
    return [seg.strip() for seg in text.split(".") if seg.strip()]


def parse_canonical(text: str) -> Syllogism:
    """Parse ``"P1. P2. ... Conclusion."`` into a :class:`Syllogism`.

    Every segment is matched before the sentence count is checked, so an
    unreadable sentence is reported as such even when it stands alone.
    """
    segments = split_sentences(text)
    props = []
    for seg in segments:
        try:
            props.append(parse_sentence(seg))
        except ParseFailure as exc:
            raise ParseFailure(exc.kind, seg) from None
    if len(props) < 2:
        raise ParseFailure(FailureKind.WRONG_SENTENCE_COUNT, text, found=len(props))
    return Syllogism(tuple(props[:-1]), props[-1])


def _check_emittable(term: Term) -> None:
    text = term.text
    if "." in text:
        raise ValueError(f"term {text!r} contains the sentence delimiter '.'")
    tokens = text.split(" ")
    if "are" in tokens or _IS.search(text):
        raise ValueError(f"term {text!r} contains a copula and would not parse back")
    if tokens[0] == "not":
        raise ValueError(f"term {text!r} starts with 'not' and would not parse back")


def emit_proposition(prop: Proposition) -> str:
    for t in prop.terms:
        _check_emittable(t)
    return _RENDER[prop.form].format(prop.subject.text, prop.predicate.text)


def emit_canonical(syllogism: Syllogism | Iterable[Proposition]) -> str:
    """Render propositions back to canonical text, one sentence each.

    Raises ``ValueError`` for terms that would not survive a round trip
    (a '.' delimiter, an embedded copula, or a leading 'not').
    """
    props = syllogism.propositions if isinstance(syllogism, Syllogism) else tuple(syllogism)
    return " ".join(emit_proposition(p) + "." for p in props)
