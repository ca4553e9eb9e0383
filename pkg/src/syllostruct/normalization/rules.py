"""Rule-based rewriting of English paraphrases into canonical categorical form.

Rules are ordered data; the first one that matches wins. Each rule
captures a subject ``x`` and predicate ``y``, the sentence is re-rendered
as ``"<quantifier> x are y"`` and then read by the canonical parser, so a
sentence that is already canonical comes back exactly as the parser
would read it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Tuple

from ..core import Proposition, PropositionForm
from ..parsing import ParseFailure, match_aeio, normalize_surface


class NotNormalizable(ValueError):
    """No paraphrase rule recognizes the sentence."""

    def __init__(self, sentence: str, reason: str = "no paraphrase rule matched"):
        self.sentence = sentence
        super().__init__(f"{reason}: {sentence!r}")


COP = r"(?:is|are)"
REL = r"(?:that|which|who)"
THERE = r"there (?:are|is|exist|exists)"
SOME = r"(?:some|a few|certain|several|a portion of)"
EVERY = r"(?:all|every|each|any)(?: single)?"
X = r"(?P<x>.+?)"
Y = r"(?P<y>.+)"

_QUANTIFIER_START = re.compile(
    r"^(?:all|every|each|any|some|no|none|not|there|a few|certain|several|"
    r"a portion|at least|a number|many|most|few)\b"
)


@dataclass(frozen=True)
class ParaphraseRule:
    name: str
    pattern: str
    target_form: PropositionForm
    note: str = ""
    # subject must not itself open with a quantifier (for quantifier-less surface forms)
    bare: bool = False

    def __post_init__(self):
        object.__setattr__(self, "_regex", re.compile("^" + self.pattern + "$"))

    def match(self, sentence: str):
        return self._regex.match(sentence)


A, E, I, O = PropositionForm.A, PropositionForm.E, PropositionForm.I, PropositionForm.O

PARAPHRASE_RULES: Tuple[ParaphraseRule, ...] = (
    # double negatives read as universal affirmatives
    ParaphraseRule("there_are_no_x_that_are_not_y", rf"{THERE} no {X} {REL} {COP} not {Y}", A, "double negative"),
    ParaphraseRule("no_x_are_not_y", rf"(?:no|not a single) {X} {COP} not {Y}", A, "double negative"),
    # particular negatives
    ParaphraseRule("not_all_x_are_y", rf"not (?:all|every|each) {X} {COP} {Y}", O),
    ParaphraseRule("not_the_case_every_x", rf"it (?:is|'s) not (?:the case|true) that (?:all|every|each|any) {X} {COP} {Y}", O),
    ParaphraseRule("at_least_one_x_is_not_y", rf"at least one {X} {COP} not {Y}", O),
    ParaphraseRule("some_x_are_not_y", rf"{SOME} {X} {COP} not {Y}", O),
    ParaphraseRule("there_exist_x_that_are_not_y", rf"{THERE} (?:some |a few |certain )?{X} {REL} {COP} not {Y}", O),
    ParaphraseRule("something_that_is_x_is_not_y", rf"something {REL} {COP} {X} {COP} not {Y}", O),
    # universal affirmatives
    ParaphraseRule("anything_that_is_x_is_y", rf"(?:anything|everything|whatever|each thing|every thing|any thing)(?: {REL})? {COP} {X} {COP} {Y}", A),
    ParaphraseRule(
        "every_thing_that_is_x_is_y",
        rf"{EVERY} (?:things?|creatures?|figures?|ones?|items?|objects?|beings?|entity|entities|members?) {REL} {COP} {X} {COP} {Y}",
        A,
    ),
    ParaphraseRule("every_x_is_y", rf"{EVERY} {X} {COP} {Y}", A),
    ParaphraseRule("set_of_x_contained_in_y", rf"the (?:entire |whole )?set of {X} {COP} (?:contained|included) (?:with)?in (?:the set of )?{Y}", A),
    ParaphraseRule("x_is_subset_of_y", rf"(?:the set of )?{X} {COP} (?:a )?subset of (?:the set of )?{Y}", A, bare=True),
    # universal negatives
    ParaphraseRule("there_are_no_x_that_are_y", rf"{THERE} no {X} {REL} {COP} {Y}", E),
    ParaphraseRule("no_x_are_y", rf"(?:no|not a single|not one|none of the) {X} {COP} {Y}", E),
    ParaphraseRule("not_the_case_bare", rf"it (?:is|'s) not the case that {X} are {Y}", E, "bare plurals", bare=True),
    ParaphraseRule("x_cannot_be_y", rf"{X} (?:cannot|can not|can't) be {Y}", E, bare=True),
    ParaphraseRule("x_is_never_y", rf"{X} {COP} never {Y}", E, bare=True),
    ParaphraseRule("x_are_not_y", rf"{X} are not {Y}", E, "bare plurals", bare=True),
    # particular affirmatives
    ParaphraseRule("something_that_is_x_is_y", rf"(?:something|some things?) {REL} {COP} {X} {COP} {Y}", I),
    ParaphraseRule("there_exist_x_that_are_y", rf"{THERE} (?:some |a few |certain |several )?{X} {REL} {COP} {Y}", I),
    ParaphraseRule("some_x_are_y", rf"(?:{SOME}|at least one) {X} {COP} {Y}", I),
)

_WRAPPERS = (
    re.compile(r"^(?:therefore|thus|hence|so|consequently|accordingly)\b\s*,?\s*"),
    re.compile(r"^it (?:is|'s) (?:also )?(?:true|a fact|certain|the case|known|evident|clear|undeniable) that\s+"),
    re.compile(r"^(?:this has led to the conclusion|it follows|we can conclude|one can conclude|it can be concluded|we know) that\s+"),
    re.compile(r"^(?:in fact|indeed|actually)\b\s*,?\s*"),
)
_FILLERS = re.compile(r",?\s*\b(?:in fact|actually|indeed|really)\b\s*,?")
_ALSO = re.compile(r"\b(is|are) also\b")
_CALLED = re.compile(r"\b(?:can be called|can be described as|count as)\b")
_TERM_PREFIX = re.compile(r"^(?:(?:a|an|the) (?=\S)|(?:type|kind|sort) of (?=\S))")

_RENDER = {A: "all {} are {}", E: "no {} are {}", I: "some {} are {}", O: "some {} are not {}"}


def clean_sentence(raw: str) -> str:
    """Lowercase, drop sentence punctuation and rhetorical wrappers."""
    s = re.sub(r"\s+", " ", raw.lower()).strip().rstrip(".!;: ").strip()
    changed = True
    while changed:
        changed = False
        for wrapper in _WRAPPERS:
            new = wrapper.sub("", s, count=1)
            if new != s:
                s, changed = new.strip(), True
    s = _FILLERS.sub(" ", s)
    s = _ALSO.sub(r"\1", s)
    s = _CALLED.sub("are", s)
    return re.sub(r"\s+", " ", s).strip()


def clean_term(text: str) -> str:
    t = text.strip(" ,")
    while True:
        new = _TERM_PREFIX.sub("", t)
        if new == t:
            return t
        t = new


def rewrite(raw_sentence: str) -> Optional[Tuple[ParaphraseRule, str]]:
    """Find the first matching rule and the canonical sentence it produces."""
    sentence = clean_sentence(raw_sentence)
    for rule in PARAPHRASE_RULES:
        m = rule.match(sentence)
        if not m:
            continue
        x, y = clean_term(m.group("x")), clean_term(m.group("y"))
        if not x or not y or y == "not" or y.startswith("not "):
            continue
        if rule.bare and _QUANTIFIER_START.match(x):
            continue
        return rule, _RENDER[rule.target_form].format(x, y)
    return None


def normalize_en(raw_sentence: str) -> Proposition:
    """Map one English sentence to a :class:`Proposition`.

    >>> str(normalize_en("Every single puppy is a kitten."))
    'all puppy are kitten'
    """
    hit = rewrite(raw_sentence)
    if hit is None:
        raise NotNormalizable(raw_sentence)
    try:
        return match_aeio(normalize_surface(hit[1]))
    except ParseFailure as exc:
        raise NotNormalizable(raw_sentence, f"rewritten sentence did not parse ({exc})") from None
