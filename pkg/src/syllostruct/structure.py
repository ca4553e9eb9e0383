"""Term-role analysis: minor/major/middle terms, premise roles, mood and figure."""

from __future__ import annotations

import enum

from .core import Figure, Mood, StructuredSyllogism, Syllogism


class StructureReason(str, enum.Enum):
    PREMISE_COUNT = "PremiseCountNot2"
    TERM_COUNT = "TermCountNot3"
    NO_UNIQUE_MIDDLE = "NoUniqueMiddle"
    MAJOR_NOT_FOUND = "MajorNotFound"
    MINOR_NOT_FOUND = "MinorNotFound"


class StructureFailure(ValueError):
    def __init__(self, reason: StructureReason, detail: str = ""):
        self.reason = StructureReason(reason)
        super().__init__(f"{self.reason.value}{': ' + detail if detail else ''}")


# (middle is subject of major, middle is subject of minor) -> figure
_FIGURES = {
    (True, False): Figure.FIRST,
    (False, False): Figure.SECOND,
    (True, True): Figure.THIRD,
    (False, True): Figure.FOURTH,
}


def analyze(syllogism: Syllogism) -> StructuredSyllogism:
    """Resolve the roles of a two-premise syllogism.

    The premise holding the major term (conclusion predicate) is the major
    premise; the first premise is tried first. The other premise must hold
    the minor term, otherwise the argument is rejected with
    ``MinorNotFound``.
    """
    if len(syllogism.premises) != 2:
        raise StructureFailure(StructureReason.PREMISE_COUNT, f"got {len(syllogism.premises)}")
    p1, p2 = syllogism.premises
    concl = syllogism.conclusion
    S, P = concl.subject, concl.predicate
    u1, u2 = set(p1.terms), set(p2.terms)

    if len(u1 | u2 | {S, P}) != 3:
        raise StructureFailure(StructureReason.TERM_COUNT)
    middle = (u1 & u2) - {S, P}
    if len(middle) != 1:
        raise StructureFailure(StructureReason.NO_UNIQUE_MIDDLE)
    (M,) = middle

    if P in u1:
        major, minor = 0, 1
    elif P in u2:
        major, minor = 1, 0
    else:
        raise StructureFailure(StructureReason.MAJOR_NOT_FOUND)
    if S not in syllogism.premises[minor].terms:
        raise StructureFailure(StructureReason.MINOR_NOT_FOUND)

    maj, mino = syllogism.premises[major], syllogism.premises[minor]
    figure = _FIGURES[(maj.subject == M, mino.subject == M)]
    mood = Mood(maj.form, mino.form, concl.form)
    return StructuredSyllogism(
        source=syllogism,
        minor_term=S,
        major_term=P,
        middle_term=M,
        major_index=major,
        minor_index=minor,
        mood=mood,
        figure=figure,
    )
