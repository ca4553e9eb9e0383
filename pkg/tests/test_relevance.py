from syllostruct.core import Figure, Malformed, Mood, MoodFigure, Proposition, Trivial, TrivialKind
from syllostruct.corpus import entailing_subsets
from syllostruct.oracle import entails
from syllostruct.relevance import select_relevant
from syllostruct.validity import ValidityConfig

P = Proposition

SHAPES = [
    P("E", "circles", "three-sided figures"),
    P("I", "isosceles triangles", "three-sided figures"),
    P("A", "scalene triangles", "three-sided figures"),
    P("A", "equilateral triangles", "three-sided figures"),
    P("A", "triangles", "three-sided figures"),
    P("E", "circles", "triangles"),
]


def test_triangle_fixture_selects_zero_and_four():
    concl = P("E", "triangles", "circles")
    verdict, rel = select_relevant(SHAPES, concl)
    assert rel == {0, 4}
    assert str(verdict.basis) == "EAE-2"
    assert entails([SHAPES[0], SHAPES[4]], concl, max_universe=None)


def test_barbara_among_distractors():
    sentences = [
        P("I", "x", "p"),
        P("A", "m", "p"),
        P("O", "x", "m"),
        P("A", "s", "m"),
        P("E", "x", "s"),
    ]
    concl = P("A", "s", "p")
    verdict, rel = select_relevant(sentences, concl)
    assert verdict.valid and rel == {1, 3}
    assert entailing_subsets(sentences, concl) == [frozenset({1, 3})]


def test_invalid_gives_empty_set():
    verdict, rel = select_relevant([P("A", "p", "m"), P("A", "s", "m")], P("A", "s", "p"))
    assert not verdict.valid and rel == frozenset()
    assert verdict.basis == MoodFigure(Mood.parse("AAA"), Figure.SECOND)


def test_restated_conclusion_is_singleton():
    sentences = [P("A", "x", "y"), P("I", "s", "p"), P("E", "q", "r")]
    verdict, rel = select_relevant(sentences, P("I", "s", "p"))
    assert verdict.basis == Trivial(TrivialKind.PETITIO_PRINCIPII)
    assert rel == {1}


def test_explosion_returns_pair():
    sentences = [P("A", "x", "y"), P("I", "a", "b"), P("O", "x", "y")]
    verdict, rel = select_relevant(sentences, P("E", "q", "r"))
    assert verdict.basis == Trivial(TrivialKind.EXPLOSION) and rel == {0, 2}


def test_trivial_rules_respect_config():
    cfg = ValidityConfig(enabled_trivial_rules=frozenset())
    verdict, rel = select_relevant([P("I", "s", "p")], P("I", "s", "p"), cfg)
    assert not verdict.valid and rel == frozenset()
    assert verdict.basis == Malformed("no premise pair")


def test_lexicographic_tie_break():
    sentences = [P("A", "m", "p"), P("A", "s", "m"), P("A", "m", "p"), P("A", "s", "m")]
    _, rel = select_relevant(sentences, P("A", "s", "p"))
    assert rel == {0, 1}


def test_renaming_keeps_indices():
    mapping = {"circles": "ovals", "triangles": "wedges", "three-sided figures": "shapes"}
    concl = P("E", "triangles", "circles")
    before = select_relevant(SHAPES, concl)
    after = select_relevant([s.rename(mapping) for s in SHAPES], concl.rename(mapping))
    assert before == after
