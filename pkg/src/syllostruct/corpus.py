"""Synthetic evaluation data with gold labels from the model-theoretic oracle.

Two kinds of instance are generated:

* validity records: every mood in every figure, realized in English with a
  rotating set of paraphrase templates and lexicalized twice, once along a
  real-world taxonomy (``consistent``) and once with the taxonomy reversed
  (``inconsistent``);
* relevance instances: a conclusion among distractor premises over at most
  four terms, where the gold set is checked exhaustively against the oracle.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .core import Figure, Proposition, PropositionForm, Term
from .evaluation import DatasetRecord
from .oracle import all_moods, entails, instantiate
from .validity import TRIVIAL_ORDER, VALIDITY_TABLE

# (narrow, middle, broad): every narrow thing is a middle thing, every middle thing a broad thing
TAXONOMY: Tuple[Tuple[str, str, str], ...] = (
    ("poodles", "dogs", "mammals"),
    ("sparrows", "birds", "animals"),
    ("roses", "flowers", "plants"),
    ("oaks", "trees", "plants"),
    ("salmon", "fish", "animals"),
    ("sedans", "cars", "vehicles"),
    ("violins", "string instruments", "instruments"),
    ("carrots", "root vegetables", "vegetables"),
    ("apples", "fruits", "foods"),
    ("hammers", "hand tools", "tools"),
    ("squares", "rectangles", "polygons"),
    ("primes", "integers", "numbers"),
    ("cobras", "snakes", "reptiles"),
    ("ants", "insects", "arthropods"),
    ("novels", "books", "publications"),
    ("pianists", "musicians", "artists"),
    ("surgeons", "doctors", "professionals"),
    ("lions", "big cats", "felines"),
    ("diamonds", "gemstones", "minerals"),
    ("tulips", "bulb flowers", "flowers"),
    ("sonnets", "poems", "texts"),
    ("kayaks", "boats", "vessels"),
    ("granite slabs", "stones", "solids"),
    ("espressos", "coffees", "beverages"),
)

# one list of surface templates per form; {x} subject, {y} predicate
TEMPLATES = {
    PropositionForm.A: (
        "All {x} are {y}.",
        "There are no {x} that are not {y}.",
        "It is true that all {x} are {y}.",
        "No {x} are not {y}.",
        "The set of {x} is a subset of {y}.",
    ),
    PropositionForm.E: (
        "No {x} are {y}.",
        "There are no {x} that are {y}.",
        "{X} are never {y}.",
        "{X} cannot be {y}.",
        "Not a single {x} is {y}.",
    ),
    PropositionForm.I: (
        "Some {x} are {y}.",
        "A few {x} are {y}.",
        "There exist {x} that are {y}.",
        "A portion of {x} are {y}.",
        "At least one {x} is {y}.",
    ),
    PropositionForm.O: (
        "Some {x} are not {y}.",
        "Not all {x} are {y}.",
        "There exist {x} that are not {y}.",
        "A few {x} are not {y}.",
        "At least one {x} is not {y}.",
    ),
}
CONCLUSION_PREFIXES = ("Therefore, ", "Thus, ", "Hence, ", "So ", "Consequently, ")


def render(prop: Proposition, variant: int = 0) -> str:
    """Realize a proposition as an English sentence using template ``variant``."""
    options = TEMPLATES[prop.form]
    template = options[variant % len(options)]
    x, y = prop.subject.text, prop.predicate.text
    return template.format(x=x, y=y, X=x[:1].upper() + x[1:])


def _conclusion(sentence: str, variant: int) -> str:
    prefix = CONCLUSION_PREFIXES[variant % len(CONCLUSION_PREFIXES)]
    return prefix + sentence[:1].lower() + sentence[1:]


def validity_records(existential_import: bool = True, max_universe: Optional[int] = None) -> List[DatasetRecord]:
    """All 256 forms, each in a consistent and an inconsistent lexicalization (512 records).

    Gold validity comes from :func:`oracle.entails`, not from the lookup table.
    """
    records = []
    forms = [(mood, figure) for figure in Figure for mood in all_moods()]
    for n, (mood, figure) in enumerate(forms):
        narrow, middle, broad = TAXONOMY[n % len(TAXONOMY)]
        abstract = instantiate(mood, figure)
        gold = entails(abstract.premises, abstract.conclusion, existential_import, max_universe)
        for group, (s, m, p) in (("consistent", (narrow, middle, broad)), ("inconsistent", (broad, middle, narrow))):
            syl = instantiate(mood, figure, Term(s), Term(m), Term(p))
            variant = n + (group == "inconsistent")
            sentences = [render(prop, variant + k) for k, prop in enumerate(syl.premises)]
            sentences.append(_conclusion(render(syl.conclusion, variant + 2), variant))
            records.append(DatasetRecord(
                id=f"syn-{int(figure)}{mood}-{group[0]}",
                language="en",
                sentences=tuple(sentences),
                gold_validity=gold,
                gold_relevant=frozenset((0, 1)) if gold else frozenset(),
                plausibility_group=group,
            ))
    return records


@dataclass(frozen=True)
class RelevanceInstance:
    premises: Tuple[Proposition, ...]
    conclusion: Proposition
    gold: FrozenSet[int]

    def to_record(self, rid: str, variant: int = 0) -> DatasetRecord:
        sentences = [render(p, variant + k) for k, p in enumerate(self.premises)]
        sentences.append(_conclusion(render(self.conclusion, variant), variant))
        return DatasetRecord(
            id=rid,
            language="en",
            sentences=tuple(sentences),
            gold_validity=bool(self.gold),
            gold_relevant=self.gold,
            plausibility_group="neutral",
        )


def _random_prop(rng: random.Random, terms: Sequence[Term]) -> Proposition:
    s, p = rng.sample(list(terms), 2)
    return Proposition(rng.choice(list(PropositionForm)), s, p)


def entailing_subsets(premises: Sequence[Proposition], conclusion: Proposition, existential_import: bool = True):
    """Premise index sets of size 1 or 2 that entail ``conclusion`` (exact oracle)."""
    hits = []
    for size in (1, 2):
        for combo in itertools.combinations(range(len(premises)), size):
            if entails([premises[i] for i in combo], conclusion, existential_import, max_universe=None):
                hits.append(frozenset(combo))
    return hits


def relevance_instances(
    n: int,
    seed: int = 0,
    *,
    existential_import: bool = True,
    max_premises: int = 6,
    valid_fraction: float = 0.6,
) -> List[RelevanceInstance]:
    """Instances over at most four terms whose gold set is the unique entailing pair (or empty).

    A valid instance hides one valid syllogistic pair among random
    distractors; it is kept only when no other single premise or pair
    entails the conclusion. An invalid instance is kept only when no single
    premise or pair entails it.
    """
    rng = random.Random(seed)
    valid_forms = [(m, f) for f in Figure for m in all_moods() if str(m) in VALIDITY_TABLE[f]]
    out: List[RelevanceInstance] = []
    while len(out) < n:
        lex = rng.choice(TAXONOMY)
        extra = rng.choice([t for t in TAXONOMY if t != lex])
        s, m, p, x = (Term(t) for t in (lex[0], lex[1], lex[2], rng.choice(extra)))
        if len({s, m, p, x}) < 4:
            continue
        terms = (s, m, p, x)
        if rng.random() < valid_fraction:
            mood, figure = rng.choice(valid_forms)
            syl = instantiate(mood, figure, s, m, p)
            n_distractors = rng.randint(0, max_premises - 2)
            premises = [_random_prop(rng, terms) for _ in range(n_distractors)]
            slots = sorted(rng.sample(range(n_distractors + 2), 2))
            for slot, prop in zip(slots, syl.premises):
                premises.insert(slot, prop)
            conclusion = syl.conclusion
            gold = frozenset(slots)
        else:
            premises = [_random_prop(rng, terms) for _ in range(rng.randint(2, max_premises))]
            conclusion = _random_prop(rng, terms)
            gold = frozenset()
        hits = entailing_subsets(premises, conclusion, existential_import)
        if (gold and hits == [gold]) or (not gold and not hits):
            out.append(RelevanceInstance(tuple(premises), conclusion, gold))
    return out


def trivial_cases(n: int, seed: int = 0, existential_import: bool = True) -> List[Tuple[Tuple[Proposition, ...], Proposition]]:
    """Premise lists (1 to 3 sentences, up to 4 terms) seeded with a trivial pattern.

    Each case plants one trivially valid relation for a randomly chosen
    rule, then adds random extra premises.
    """
    rng = random.Random(seed)
    F = PropositionForm
    kinds = [k for k in TRIVIAL_ORDER if existential_import or k.value not in ("subalternation_ai", "subalternation_eo")]
    pool = [Term(t) for t in ("a", "b", "c", "d")]
    cases = []
    while len(cases) < n:
        kind = rng.choice(kinds).value
        a, b = rng.sample(pool, 2)
        if kind == "petitio_principii":
            concl = _random_prop(rng, pool)
            planted = [concl]
        elif kind == "conversion_e":
            concl, planted = Proposition(F.E, a, b), [Proposition(F.E, b, a)]
        elif kind == "conversion_i":
            concl, planted = Proposition(F.I, a, b), [Proposition(F.I, b, a)]
        elif kind == "subalternation_ai":
            concl, planted = Proposition(F.I, a, b), [Proposition(F.A, a, b)]
        elif kind == "subalternation_eo":
            concl, planted = Proposition(F.O, a, b), [Proposition(F.E, a, b)]
        else:
            concl = _random_prop(rng, pool)
            pos, neg = rng.choice(((F.A, F.O), (F.E, F.I)))
            planted = [Proposition(pos, a, b), Proposition(neg, a, b)]
        premises = planted + [_random_prop(rng, pool) for _ in range(rng.randint(0, 3 - len(planted)))]
        rng.shuffle(premises)
        cases.append((tuple(premises), concl))
    return cases
