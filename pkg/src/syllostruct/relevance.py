"""Pick the premises that actually carry a conclusion among distractors."""

from __future__ import annotations

import itertools
from typing import Sequence, Tuple

from .core import (
    Malformed,
    MoodFigure,
    Proposition,
    RelevanceSet,
    Syllogism,
    Trivial,
    ValidityVerdict,
)
from .validity import DEFAULT_CONFIG, ValidityConfig, structural_verdict, trivial_witness


def select_relevant(
    sentences: Sequence[Proposition],
    conclusion: Proposition,
    cfg: ValidityConfig = DEFAULT_CONFIG,
) -> Tuple[ValidityVerdict, RelevanceSet]:
    """Return the verdict and 0-based indices of the premises that support ``conclusion``.

    Pairs ``(i, j)`` with ``i < j`` are tried in lexicographic order and the
    first structurally valid pair wins. Failing that, enabled trivial rules
    are tried: single-premise rules yield a singleton, explosion yields the
    contradictory pair. Otherwise the argument is invalid with an empty set.
    """
    sentences = tuple(sentences)
    last_basis = None
    for i, j in itertools.combinations(range(len(sentences)), 2):
        verdict = structural_verdict(Syllogism((sentences[i], sentences[j]), conclusion), cfg)
        if verdict.valid:
            return verdict, frozenset((i, j))
        # report the first well-formed pair's basis, else the first failure
        if last_basis is None or (isinstance(verdict.basis, MoodFigure) and not isinstance(last_basis, MoodFigure)):
            last_basis = verdict.basis

    hit = trivial_witness(sentences, conclusion, cfg)
    if hit is not None:
        kind, indices = hit
        return ValidityVerdict(True, Trivial(kind)), frozenset(indices)

    if last_basis is None:
        last_basis = Malformed("no premise pair")
    return ValidityVerdict(False, last_basis), frozenset()
