import pytest

from syllostruct.core import (
    Figure,
    Malformed,
    Mood,
    MoodFigure,
    Proposition,
    PropositionForm as F,
    StructuredSyllogism,
    Syllogism,
    Term,
    Trivial,
    TrivialKind,
    ValidityVerdict,
)


def test_term_normalizes_case_and_whitespace():
    assert Term("  Big   Cats ") == Term("big cats")
    assert Term("Big Cats").text == "big cats"


def test_term_rejects_empty():
    with pytest.raises(ValueError):
        Term("   ")


def test_proposition_accepts_plain_strings():
    p = Proposition(F.A, "Dogs", "mammals")
    assert p.subject == Term("dogs")
    assert str(p) == "all dogs are mammals"
    assert str(Proposition("O", "s", "p")) == "some s are not p"


def test_form_properties():
    assert F.A.universal and not F.A.negative
    assert F.O.particular and F.O.negative
    assert F.E.universal and F.E.negative
    assert F.I.particular and not F.I.negative


def test_rename_with_strings_and_terms():
    syl = Syllogism((Proposition("A", "m", "p"), Proposition("A", "s", "m")), Proposition("A", "s", "p"))
    out = syl.rename({"m": "middle", Term("s"): Term("small")})
    assert [t.text for t in out.terms()] == ["middle", "p", "small"]


def test_syllogism_needs_a_premise():
    with pytest.raises(ValueError):
        Syllogism((), Proposition("A", "s", "p"))


def test_mood_parse_and_str():
    assert str(Mood.parse("eio")) == "EIO"
    with pytest.raises(ValueError):
        Mood.parse("AAX")


def test_structured_syllogism_invariants():
    syl = Syllogism((Proposition("A", "m", "p"), Proposition("A", "s", "m")), Proposition("A", "s", "p"))
    st = StructuredSyllogism(syl, Term("s"), Term("p"), Term("m"), 0, 1, Mood.parse("AAA"), 1)
    assert st.figure is Figure.FIRST and st.M == Term("m")
    with pytest.raises(ValueError):
        StructuredSyllogism(syl, Term("s"), Term("p"), Term("p"), 0, 1, Mood.parse("AAA"), 1)
    with pytest.raises(ValueError):
        StructuredSyllogism(syl, Term("s"), Term("p"), Term("m"), 1, 0, Mood.parse("AAA"), 1)


def test_verdict_strings_and_invariants():
    assert str(ValidityVerdict(False, MoodFigure(Mood.parse("AAA"), Figure.SECOND))) == "invalid (AAA-2)"
    assert str(ValidityVerdict(True, Trivial(TrivialKind.PETITIO_PRINCIPII))) == "valid (trivial: petitio principii)"
    with pytest.raises(ValueError):
        ValidityVerdict(True, Malformed("x"))
    with pytest.raises(ValueError):
        ValidityVerdict(False, Trivial(TrivialKind.EXPLOSION))
