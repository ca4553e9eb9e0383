"""Validity by mood/figure lookup plus detection of trivially valid arguments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Mapping, Optional, Sequence, Union

from .core import (
    Figure,
    Malformed,
    Mood,
    MoodFigure,
    Proposition,
    PropositionForm as F,
    Syllogism,
    Trivial,
    TrivialKind,
    ValidityVerdict,
)
from .parsing import ParseFailure, parse_canonical
from .structure import StructureFailure, analyze


def _table(rows: Mapping[int, str]) -> Mapping[Figure, FrozenSet[str]]:
    return {Figure(k): frozenset(m.strip() for m in v.split(",")) for k, v in rows.items()}


# valid moods per figure under existential import (24 forms)
_REFERENCE_ROWS = {
    1: "AAA, EAE, AII, EIO, AAI, EAO",
    2: "EAE, AEE, EIO, AOO, EAO, AEO",
    3: "AAI, IAI, AII, EAO, OAO, EIO",
    4: "AAI, AEE, IAI, EAO, EIO, AEO",
}
VALIDITY_TABLE = _table(_REFERENCE_ROWS)

# the 15 forms that stay valid when terms may be empty; frozen from
# oracle.valid_forms(existential_import=False)
VALIDITY_TABLE_NO_IMPORT = _table({
    1: "AAA, EAE, AII, EIO",
    2: "EAE, AEE, EIO, AOO",
    3: "IAI, AII, OAO, EIO",
    4: "AEE, IAI, EIO",
})

TRIVIAL_ORDER = (
    TrivialKind.PETITIO_PRINCIPII,
    TrivialKind.CONVERSION_E,
    TrivialKind.CONVERSION_I,
    TrivialKind.SUBALTERNATION_AI,
    TrivialKind.SUBALTERNATION_EO,
    TrivialKind.EXPLOSION,
)
_NEEDS_IMPORT = frozenset({TrivialKind.SUBALTERNATION_AI, TrivialKind.SUBALTERNATION_EO})


@dataclass(frozen=True)
class ValidityConfig:
    """Knobs for :func:`judge`.

    ``enabled_trivial_rules=None`` enables every rule that is sound under
    the chosen import setting (all six with import, four without).
    """

    existential_import: bool = True
    enabled_trivial_rules: Optional[FrozenSet[TrivialKind]] = None
    trivial_before_structure: bool = True

    def __post_init__(self):
        rules = self.enabled_trivial_rules
        if rules is None:
            rules = frozenset(TRIVIAL_ORDER)
            if not self.existential_import:
                rules -= _NEEDS_IMPORT
        else:
            rules = frozenset(TrivialKind(r) for r in rules)
            if not self.existential_import and rules & _NEEDS_IMPORT:
                raise ValueError("subalternation rules require existential import")
        object.__setattr__(self, "enabled_trivial_rules", rules)


DEFAULT_CONFIG = ValidityConfig()


def table_for(cfg: ValidityConfig = DEFAULT_CONFIG) -> Mapping[Figure, FrozenSet[str]]:
    return VALIDITY_TABLE if cfg.existential_import else VALIDITY_TABLE_NO_IMPORT


def lookup_valid(mood: Mood, figure: Figure, cfg: ValidityConfig = DEFAULT_CONFIG) -> bool:
    return str(mood) in table_for(cfg)[Figure(figure)]


def _same_terms(a: Proposition, b: Proposition) -> bool:
    return a.subject == b.subject and a.predicate == b.predicate


def _converse(a: Proposition, b: Proposition) -> bool:
    return a.subject == b.predicate and a.predicate == b.subject


def _contradictory(a: Proposition, b: Proposition) -> bool:
    if not _same_terms(a, b):
        return False
    return {a.form, b.form} in ({F.A, F.O}, {F.E, F.I})


def _single_premise_hit(kind: TrivialKind, premise: Proposition, concl: Proposition) -> bool:
    if kind is TrivialKind.PETITIO_PRINCIPII:
        return premise == concl
    if kind is TrivialKind.CONVERSION_E:
        return premise.form is F.E and concl.form is F.E and _converse(premise, concl)
    if kind is TrivialKind.CONVERSION_I:
        return premise.form is F.I and concl.form is F.I and _converse(premise, concl)
    if kind is TrivialKind.SUBALTERNATION_AI:
        return premise.form is F.A and concl.form is F.I and _same_terms(premise, concl)
    if kind is TrivialKind.SUBALTERNATION_EO:
        return premise.form is F.E and concl.form is F.O and _same_terms(premise, concl)
    return False


def trivial_witness(premises: Sequence[Proposition], conclusion: Proposition, cfg: ValidityConfig = DEFAULT_CONFIG):
    """First enabled trivial rule that fires, with the premise indices it used.

    Returns ``(kind, indices)`` or ``None``.
    """
    for kind in TRIVIAL_ORDER:
        if kind not in cfg.enabled_trivial_rules:
            continue
        if kind is TrivialKind.EXPLOSION:
            for i in range(len(premises)):
                for j in range(i + 1, len(premises)):
                    if _contradictory(premises[i], premises[j]):
                        return kind, (i, j)
            continue
        for i, premise in enumerate(premises):
            if _single_premise_hit(kind, premise, conclusion):
                return kind, (i,)
    return None


def detect_trivial(syllogism: Syllogism, cfg: ValidityConfig = DEFAULT_CONFIG) -> Optional[TrivialKind]:
    hit = trivial_witness(syllogism.premises, syllogism.conclusion, cfg)
    return hit[0] if hit else None


def structural_verdict(syllogism: Syllogism, cfg: ValidityConfig = DEFAULT_CONFIG) -> ValidityVerdict:
    """Mood/figure verdict only; structure failures come back as ``Malformed``."""
    try:
        st = analyze(syllogism)
    except StructureFailure as exc:
        return ValidityVerdict(False, Malformed(exc.reason.value))
    return ValidityVerdict(lookup_valid(st.mood, st.figure, cfg), MoodFigure(st.mood, st.figure))


def judge(raw: Union[str, Syllogism], cfg: ValidityConfig = DEFAULT_CONFIG) -> ValidityVerdict:
    """Classify an argument. Never raises for bad input; failures become ``Malformed``."""
    if isinstance(raw, str):
        try:
            syllogism = parse_canonical(raw)
        except ParseFailure as exc:
            return ValidityVerdict(False, Malformed(str(exc)))
    else:
        syllogism = raw

    if cfg.trivial_before_structure:
        kind = detect_trivial(syllogism, cfg)
        if kind is not None:
            return ValidityVerdict(True, Trivial(kind))
        return structural_verdict(syllogism, cfg)

    verdict = structural_verdict(syllogism, cfg)
    if isinstance(verdict.basis, MoodFigure):
        return verdict
    kind = detect_trivial(syllogism, cfg)
    return ValidityVerdict(True, Trivial(kind)) if kind is not None else verdict


def format_table(table: Mapping[Figure, Iterable[str]] = VALIDITY_TABLE) -> str:
    """Render a figure -> moods table, one figure per line, moods in canonical order."""
    lines = ["Figure  Valid moods (major-minor-conclusion)"]
    for figure in Figure:
        moods = sorted(table.get(figure, ()), key=_mood_sort_key(figure))
        lines.append(f"{int(figure)}       {', '.join(moods)}")
    return "\n".join(lines)


def _mood_sort_key(figure: Figure):
    # keep the printed order of the reference table; unknown moods go last
    reference = [m.strip() for m in _REFERENCE_ROWS[int(figure)].split(",")]
    return lambda m: (reference.index(m) if m in reference else len(reference), m)

