"""Turning raw arguments into canonical categorical strings."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..core import Term
from ..parsing import ParseFailure, emit_canonical, parse_canonical, split_sentences
from .remote import (
    MODES,
    FixtureMiss,
    FixtureStore,
    MalformedResponse,
    RemoteClient,
    RemoteConfig,
    TransportError,
    extract_object,
    fixture_key,
    render_prompt,
    RESPONSE_KEYS,
)
from .rules import PARAPHRASE_RULES, NotNormalizable, ParaphraseRule, normalize_en, rewrite

ENGINES = ("rules", "remote", "fixture")
SYMBOLS = ("A", "B", "C")


@dataclass(frozen=True)
class TermMapping:
    """Symbol -> surface term, symbols given out by first appearance."""

    entries: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        entries = tuple((str(s), str(t)) for s, t in self.entries)
        if len(entries) != 3:
            raise ValueError(f"a term mapping has exactly 3 entries, got {len(entries)}")
        if tuple(s for s, _ in entries) != SYMBOLS:
            raise ValueError("symbols must be A, B, C in order")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "TermMapping":
        pairs = re.findall(r"([ABC])\s*:\s*([^,]+)", text)
        return cls(tuple((s, t.strip()) for s, t in pairs))

    def as_dict(self):
        return dict(self.entries)

    def __str__(self) -> str:
        return ",".join(f"{s}:{t}" for s, t in self.entries)


@dataclass(frozen=True)
class NormalizationResult:
    mode: str
    parsed: str
    reasoning: str = ""
    mapped: Optional[TermMapping] = None
    detected_language: Optional[str] = None
    well_formed: bool = False
    warnings: Tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "reasoning": self.reasoning,
            "mapped": str(self.mapped) if self.mapped else None,
            "parsed": self.parsed,
            "detected_language": self.detected_language,
            "well_formed": self.well_formed,
            "warnings": list(self.warnings),
        }


def term_distribution_warnings(parsed: str) -> Tuple[str, ...]:
    """Report (never repair) terms that do not appear in exactly two of three sentences."""
    try:
        syl = parse_canonical(parsed)
    except ParseFailure:
        return ()
    if len(syl.propositions) != 3:
        return ()
    counts = Counter(t for prop in syl.propositions for t in set(prop.terms))
    return tuple(
        f"term {t.text!r} appears in {n} of 3 sentences"
        for t, n in counts.items()
        if n != 2
    )


def _well_formed(parsed: str) -> bool:
    try:
        parse_canonical(parsed)
    except ParseFailure:
        return False
    return True


def _normalize_rules(raw: str) -> NormalizationResult:
    props = [normalize_en(s) for s in split_sentences(raw)]
    if len(props) < 2:
        raise NotNormalizable(raw, "need at least a premise and a conclusion")
    order: dict = {}
    for prop in props:
        for t in prop.terms:
            order.setdefault(t, None)
    terms = list(order)
    mapped = None
    if len(terms) == 3:
        mapped = TermMapping(tuple(zip(SYMBOLS, (t.text for t in terms))))
        symbol = {t: Term(s.lower()) for s, t in zip(SYMBOLS, terms)}
        parsed = _titlecase(emit_canonical(p.rename(symbol) for p in props))
    else:
        parsed = emit_canonical(props)
    return NormalizationResult(
        mode="english-norm",
        parsed=parsed,
        reasoning=f"rule-based rewrite of {len(props)} sentences; {len(terms)} distinct terms",
        mapped=mapped,
        well_formed=_well_formed(parsed),
    )


def _titlecase(canonical: str) -> str:
    # "all b are a." -> "All B are A." for single-letter symbol terms
    out = []
    for sentence in canonical.split(". "):
        words = [w.upper() if len(w.rstrip(".")) == 1 else w for w in sentence.split(" ")]
        words[0] = words[0].capitalize()
        out.append(" ".join(words))
    return ". ".join(out)


def result_from_response(mode: str, text: str) -> NormalizationResult:
    obj = extract_object(text, RESPONSE_KEYS[mode])
    if mode == "english-norm":
        parsed = str(obj["parsed"])
        warnings = []
        try:
            mapped = TermMapping.parse(str(obj["mapped"]))
        except ValueError as exc:
            mapped, warnings = None, [f"unreadable term mapping: {exc}"]
        return NormalizationResult(
            mode=mode,
            parsed=parsed,
            reasoning=str(obj["reasoning"]),
            mapped=mapped,
            well_formed=_well_formed(parsed),
            warnings=tuple(warnings),
        )
    parsed = str(obj["english"])
    warnings = term_distribution_warnings(parsed) if mode == "epn-validity" else ()
    return NormalizationResult(
        mode=mode,
        parsed=parsed,
        reasoning=str(obj["reasoning"]),
        detected_language=str(obj["detected_language"]),
        well_formed=_well_formed(parsed),
        warnings=warnings,
    )


def normalize_argument(
    raw: str,
    mode: str = "english-norm",
    engine: str = "rules",
    *,
    fixtures: Optional[FixtureStore] = None,
    client: Optional[RemoteClient] = None,
) -> NormalizationResult:
    """Normalize a whole argument with the chosen engine.

    ``rules`` handles English only (mode ``english-norm``). ``fixture``
    replays a recorded response and raises :class:`FixtureMiss` when none
    exists. ``remote`` sends one completion request through ``client``.
    """
    if not raw or not raw.strip():
        raise ValueError("cannot normalize an empty argument")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if engine == "rules":
        if mode != "english-norm":
            raise ValueError("the rules engine only supports mode 'english-norm'")
        return _normalize_rules(raw)
    if engine == "fixture":
        store = fixtures if fixtures is not None else FixtureStore.bundled()
        return result_from_response(mode, store.get(mode, raw))
    if engine == "remote":
        if client is None:
            client = RemoteClient(RemoteConfig.from_env())
        return result_from_response(mode, client.respond(mode, raw))
    raise ValueError(f"unknown engine {engine!r}; expected one of {', '.join(ENGINES)}")


__all__ = [
    "ENGINES",
    "MODES",
    "FixtureMiss",
    "FixtureStore",
    "MalformedResponse",
    "NormalizationResult",
    "NotNormalizable",
    "PARAPHRASE_RULES",
    "ParaphraseRule",
    "RemoteClient",
    "RemoteConfig",
    "TermMapping",
    "TransportError",
    "fixture_key",
    "normalize_argument",
    "normalize_en",
    "render_prompt",
    "result_from_response",
    "rewrite",
    "term_distribution_warnings",
]
