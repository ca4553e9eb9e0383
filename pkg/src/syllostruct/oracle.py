"""Finite-model entailment for monadic categorical propositions.

This module is the independent ground truth for the validity table: it
knows nothing about moods or figures beyond building the 256 abstract
forms, and decides entailment by enumerating models.

A model's verdict on categorical propositions depends only on which Venn
regions (combinations of term membership) are inhabited, and a universe of
``n >= 1`` elements can realize exactly the inhabited-region sets of size
``1..n``. :func:`entails` therefore enumerates every set of at most
``max_universe`` inhabited regions, which covers every model of every
universe size up to ``max_universe`` without visiting isomorphic copies.
:func:`brute_force_entails` walks the same space element by element for
cross-checking.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Mapping, Sequence, Tuple

import numpy as np

from .core import Figure, Mood, Proposition, PropositionForm, Syllogism, Term

DEFAULT_MAX_UNIVERSE = 4
MAX_TERMS = 6  # 2**6 regions still fit one uint64 occupancy mask
MAX_MODELS = 5_000_000  # occupancy masks held in memory at once


@dataclass(frozen=True)
class Model:
    universe_size: int
    extensions: Mapping[Term, FrozenSet[int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.universe_size < 0:
            raise ValueError("universe size must be >= 0")
        ext = {}
        for term, members in self.extensions.items():
            term = term if isinstance(term, Term) else Term(term)
            members = frozenset(members)
            if any(not 0 <= x < self.universe_size for x in members):
                raise ValueError(f"extension of {term} leaves the universe")
            ext[term] = members
        object.__setattr__(self, "extensions", ext)

    def extension(self, term: Term) -> FrozenSet[int]:
        try:
            return self.extensions[term]
        except KeyError:
            raise KeyError(f"model has no extension for term {term.text!r}") from None


def eval_proposition(prop: Proposition, model: Model) -> bool:
    s = model.extension(prop.subject)
    p = model.extension(prop.predicate)
    if prop.form is PropositionForm.A:
        return s <= p
    if prop.form is PropositionForm.E:
        return not (s & p)
    if prop.form is PropositionForm.I:
        return bool(s & p)
    return bool(s - p)


def _terms_of(props: Iterable[Proposition]) -> Tuple[Term, ...]:
    seen: Dict[Term, None] = {}
    for prop in props:
        seen.setdefault(prop.subject)
        seen.setdefault(prop.predicate)
    return tuple(seen)


def _canonical_key(premises: Sequence[Proposition], conclusion: Proposition):
    """Rename terms to 0..k-1 by first appearance so equivalent inputs share a cache slot."""
    index: Dict[Term, int] = {}
    out = []
    for prop in tuple(premises) + (conclusion,):
        s = index.setdefault(prop.subject, len(index))
        p = index.setdefault(prop.predicate, len(index))
        out.append((prop.form.value, s, p))
    return len(index), tuple(out[:-1]), out[-1]


def countermodel_bound(premises: Sequence[Proposition], conclusion: Proposition, existential_import: bool) -> int:
    """Universe size that is enough to find a countermodel if any exists.

    Each existential requirement (a particular premise, the negation of a
    universal conclusion, and under import the nonemptiness of each term)
    needs one witness; restricting any countermodel to a set of witnesses
    keeps it a countermodel.
    """
    need = sum(p.form.particular for p in premises) + int(conclusion.form.universal)
    if existential_import:
        need += len(_terms_of(tuple(premises) + (conclusion,)))
    return max(need, 1)


def entails(
    premises: Sequence[Proposition],
    conclusion: Proposition,
    existential_import: bool = True,
    max_universe: int | None = DEFAULT_MAX_UNIVERSE,
) -> bool:
    """True iff every model of size <= ``max_universe`` satisfying the premises satisfies the conclusion.

    With ``existential_import`` every mentioned term must be nonempty (so
    the empty universe is skipped). ``max_universe=None`` uses
    :func:`countermodel_bound`, which makes the answer exact.
    """
    premises = tuple(premises)
    if max_universe is None:
        max_universe = countermodel_bound(premises, conclusion, existential_import)
    if max_universe < 0:
        raise ValueError("max_universe must be >= 0")
    k, prem_key, concl_key = _canonical_key(premises, conclusion)
    if k > MAX_TERMS:
        raise ValueError(f"at most {MAX_TERMS} distinct terms are supported, got {k}")
    return _entails_cached(k, prem_key, concl_key, existential_import, max_universe)


@lru_cache(maxsize=None)
def _region_masks(k: int) -> Tuple[int, ...]:
    """For each term t, the bitmask over the 2**k regions whose members are in t."""
    return tuple(
        sum(1 << r for r in range(2 ** k) if r >> t & 1)
        for t in range(k)
    )


@lru_cache(maxsize=64)
def _occupancies(k: int, max_regions: int) -> np.ndarray:
    """Every set of at most ``max_regions`` inhabited regions, as uint64 masks."""
    n_regions = 2 ** k
    total = sum(math.comb(n_regions, i) for i in range(min(max_regions, n_regions) + 1))
    if total > MAX_MODELS:
        raise ValueError(
            f"{total} region sets for {k} terms and universe size {max_regions}; "
            f"lower max_universe or use fewer terms"
        )
    chunks = [np.zeros(1, dtype=np.uint64)]
    for size in range(1, min(max_regions, n_regions) + 1):
        combos = np.array(list(itertools.combinations(range(n_regions), size)), dtype=np.uint64)
        bits = np.left_shift(np.uint64(1), combos)
        chunks.append(np.bitwise_or.reduce(bits, axis=1))
    return np.concatenate(chunks)


def _truth(form: str, s: int, p: int, masks: Tuple[int, ...], occ: np.ndarray) -> np.ndarray:
    ms, mp = masks[s], masks[p]
    s_not_p = np.uint64(ms & ~mp & _all_regions(len(masks)))
    s_and_p = np.uint64(ms & mp)
    if form == "A":
        return (occ & s_not_p) == 0
    if form == "E":
        return (occ & s_and_p) == 0
    if form == "I":
        return (occ & s_and_p) != 0
    return (occ & s_not_p) != 0


def _all_regions(k: int) -> int:
    return (1 << 2 ** k) - 1


@lru_cache(maxsize=None)
def _entails_cached(k, prem_key, concl_key, existential_import, max_universe) -> bool:
    masks = _region_masks(k)
    occ = _occupancies(k, max_universe)
    ok = np.ones(occ.shape, dtype=bool)
    if existential_import:
        ok[0] = False  # empty universe
        for m in masks:
            ok &= (occ & np.uint64(m)) != 0
    for form, s, p in prem_key:
        ok &= _truth(form, s, p, masks, occ)
    form, s, p = concl_key
    return not np.any(ok & ~_truth(form, s, p, masks, occ))


def brute_force_entails(
    premises: Sequence[Proposition],
    conclusion: Proposition,
    existential_import: bool = True,
    max_universe: int = 3,
) -> bool:
    """Element-level enumeration of explicit :class:`Model` objects.

    Slow; meant for cross-checking :func:`entails` on small inputs.
    """
    premises = tuple(premises)
    terms = _terms_of(premises + (conclusion,))
    start = 1 if existential_import else 0
    for n in range(start, max_universe + 1):
        subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]
        if existential_import:
            subsets = [s for s in subsets if s]
        for assignment in itertools.product(subsets, repeat=len(terms)):
            model = Model(n, dict(zip(terms, assignment)))
            if all(eval_proposition(p, model) for p in premises) and not eval_proposition(conclusion, model):
                return False
    return True


ABSTRACT_S, ABSTRACT_M, ABSTRACT_P = Term("s"), Term("m"), Term("p")

# (major premise subject, predicate), (minor premise subject, predicate)
FIGURE_LAYOUT = {
    Figure.FIRST: ((ABSTRACT_M, ABSTRACT_P), (ABSTRACT_S, ABSTRACT_M)),
    Figure.SECOND: ((ABSTRACT_P, ABSTRACT_M), (ABSTRACT_S, ABSTRACT_M)),
    Figure.THIRD: ((ABSTRACT_M, ABSTRACT_P), (ABSTRACT_M, ABSTRACT_S)),
    Figure.FOURTH: ((ABSTRACT_P, ABSTRACT_M), (ABSTRACT_M, ABSTRACT_S)),
}


def all_moods() -> Tuple[Mood, ...]:
    return tuple(Mood(*forms) for forms in itertools.product(PropositionForm, repeat=3))


def instantiate(mood: Mood, figure: Figure, s: Term = ABSTRACT_S, m: Term = ABSTRACT_M, p: Term = ABSTRACT_P) -> Syllogism:
    """Build the major-then-minor syllogism of a given mood and figure over three terms."""
    rename = {ABSTRACT_S: s, ABSTRACT_M: m, ABSTRACT_P: p}
    (maj_s, maj_p), (min_s, min_p) = FIGURE_LAYOUT[Figure(figure)]
    major = Proposition(mood.major, rename[maj_s], rename[maj_p])
    minor = Proposition(mood.minor, rename[min_s], rename[min_p])
    return Syllogism((major, minor), Proposition(mood.conclusion, s, p))


def enumerate_forms(existential_import: bool = True, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Dict[Tuple[Mood, Figure], bool]:
    """Entailment verdict for all 64 moods in all 4 figures."""
    table = {}
    for figure in Figure:
        for mood in all_moods():
            syl = instantiate(mood, figure)
            table[(mood, figure)] = entails(syl.premises, syl.conclusion, existential_import, max_universe)
    return table


def valid_forms(existential_import: bool = True, max_universe: int = DEFAULT_MAX_UNIVERSE) -> Dict[Figure, FrozenSet[str]]:
    """The entailing moods of :func:`enumerate_forms`, grouped by figure."""
    out: Dict[Figure, set] = {f: set() for f in Figure}
    for (mood, figure), ok in enumerate_forms(existential_import, max_universe).items():
        if ok:
            out[figure].add(str(mood))
    return {f: frozenset(v) for f, v in out.items()}
