"""Dataset loading, pipelines and metrics (accuracy, premise F1, content-effect bias).

Bias and the combined score follow simple documented placeholders rather
than any official scorer: bias is the absolute accuracy gap between the
belief-consistent and belief-inconsistent groups, and the default combined
score is ``accuracy * (100 - bias) / 100``. Both are pluggable.
"""

from __future__ import annotations

import json
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

from .core import Proposition
from .normalization import FixtureStore, NotNormalizable, normalize_argument, normalize_en
from .normalization.remote import FixtureMiss, MalformedResponse
from .parsing import ParseFailure, parse_canonical
from .relevance import select_relevant
from .validity import DEFAULT_CONFIG, ValidityConfig

logger = logging.getLogger(__name__)

GROUPS = ("consistent", "inconsistent", "neutral")
SCHEMA_VERSION = 1


class DatasetError(ValueError):
    pass


@dataclass(frozen=True)
class DatasetRecord:
    id: str
    language: str
    sentences: Tuple[str, ...]
    gold_validity: bool
    gold_relevant: FrozenSet[int] = frozenset()
    plausibility_group: str = "neutral"

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "gold_relevant", frozenset(int(i) for i in self.gold_relevant))
        if not self.id:
            raise DatasetError("record id must be non-empty")
        if len(self.sentences) < 2:
            raise DatasetError(f"record {self.id}: needs at least 2 sentences")
        if not isinstance(self.gold_validity, bool):
            raise DatasetError(f"record {self.id}: gold_validity must be a boolean")
        n_premises = len(self.sentences) - 1
        if any(not 0 <= i < n_premises for i in self.gold_relevant):
            raise DatasetError(f"record {self.id}: gold_relevant indices must be premise indices < {n_premises}")
        if not self.gold_validity and self.gold_relevant:
            raise DatasetError(f"record {self.id}: invalid records must have an empty gold_relevant set")
        if self.plausibility_group not in GROUPS:
            raise DatasetError(f"record {self.id}: unknown plausibility_group {self.plausibility_group!r}")

    @classmethod
    def from_dict(cls, d: Mapping) -> "DatasetRecord":
        missing = {"id", "sentences", "gold_validity"} - d.keys()
        if missing:
            raise DatasetError(f"missing fields {sorted(missing)}")
        if not isinstance(d["sentences"], list) or not all(isinstance(s, str) for s in d["sentences"]):
            raise DatasetError("sentences must be a list of strings")
        return cls(
            id=str(d["id"]),
            language=str(d.get("language", "en")),
            sentences=tuple(d["sentences"]),
            gold_validity=d["gold_validity"],
            gold_relevant=frozenset(d.get("gold_relevant", ())),
            plausibility_group=d.get("plausibility_group", "neutral"),
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "language": self.language,
            "sentences": list(self.sentences),
            "gold_validity": self.gold_validity,
            "gold_relevant": sorted(self.gold_relevant),
            "plausibility_group": self.plausibility_group,
        }

    @property
    def premises(self) -> Tuple[str, ...]:
        return self.sentences[:-1]

    @property
    def conclusion(self) -> str:
        return self.sentences[-1]

    def raw_text(self) -> str:
        return " ".join(s if s.rstrip().endswith((".", "!", "?")) else s.rstrip() + "." for s in self.sentences)


def load_dataset(path) -> List[DatasetRecord]:
    """Read line-delimited JSON records; blank lines are skipped."""
    path = Path(path)
    records, seen = [], set()
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = DatasetRecord.from_dict(json.loads(line))
            except json.JSONDecodeError as exc:
                raise DatasetError(f"{path}:{lineno}: malformed JSON ({exc.msg})") from None
            except (DatasetError, TypeError, ValueError) as exc:
                raise DatasetError(f"{path}:{lineno}: {exc}") from None
            if rec.id in seen:
                raise DatasetError(f"{path}:{lineno}: duplicate id {rec.id!r}")
            seen.add(rec.id)
            records.append(rec)
    return records


def write_dataset(records: Sequence[DatasetRecord], path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_dict(), ensure_ascii=False) + "\n")


@dataclass(frozen=True)
class Prediction:
    valid: bool
    relevant: FrozenSet[int]
    basis: str
    error: Optional[str] = None


Pipeline = Callable[[DatasetRecord, ValidityConfig], Prediction]


def _predict(premises: Sequence[Optional[Proposition]], conclusion: Proposition, cfg: ValidityConfig) -> Prediction:
    index = [i for i, p in enumerate(premises) if p is not None]
    verdict, rel = select_relevant([premises[i] for i in index], conclusion, cfg)
    return Prediction(verdict.valid, frozenset(index[i] for i in rel), str(verdict.basis))


def rules_pipeline(record: DatasetRecord, cfg: ValidityConfig = DEFAULT_CONFIG) -> Prediction:
    """English paraphrase rules, then deterministic selection and validation.

    Premises the rules cannot read are dropped from consideration.
    """
    try:
        conclusion = normalize_en(record.conclusion)
    except NotNormalizable as exc:
        return Prediction(False, frozenset(), "malformed: conclusion", error=str(exc))
    premises: List[Optional[Proposition]] = []
    for s in record.premises:
        try:
            premises.append(normalize_en(s))
        except NotNormalizable:
            premises.append(None)
    return _predict(premises, conclusion, cfg)


_TAG = re.compile(r"\[[sg]\]")


def _align(prop: Proposition, sentences: Sequence[str], used: set) -> Optional[int]:
    """Index of the first unused source sentence mentioning both terms of ``prop``."""
    needles = [_TAG.sub("", t.text).strip() for t in prop.terms]
    for i, s in enumerate(sentences):
        low = s.lower()
        if i not in used and all(n and n in low for n in needles):
            return i
    return None


class FixturePipeline:
    """Replay recorded LLM normalizations (EPN modes), then parse and validate.

    The normalizer returns only the selected premises, so relevance indices
    are recovered by matching each premise's terms against the source
    sentences.
    """

    def __init__(self, store: Optional[FixtureStore] = None):
        self._store = store

    @property
    def store(self) -> FixtureStore:
        if self._store is None:
            self._store = FixtureStore.bundled()
        return self._store

    def __call__(self, record: DatasetRecord, cfg: ValidityConfig = DEFAULT_CONFIG) -> Prediction:
        mode = "epn-validity" if len(record.sentences) == 3 else "epn-relevance"
        try:
            result = normalize_argument(record.raw_text(), mode, "fixture", fixtures=self.store)
            syl = parse_canonical(result.parsed)
        except (FixtureMiss, MalformedResponse, ParseFailure) as exc:
            return Prediction(False, frozenset(), "malformed: normalization", error=str(exc))
        verdict, rel = select_relevant(syl.premises, syl.conclusion, cfg)
        used: set = set()
        mapped = []
        for k in sorted(rel):
            i = _align(syl.premises[k], record.premises, used)
            if i is not None:
                used.add(i)
                mapped.append(i)
        return Prediction(verdict.valid, frozenset(mapped), str(verdict.basis))


PIPELINES: Dict[str, Pipeline] = {
    "rules": rules_pipeline,
    "fixtures": FixturePipeline(),
}


def set_f1(predicted: FrozenSet[int], gold: FrozenSet[int]) -> float:
    """F1 between two index sets, in [0, 1]. Two empty sets agree perfectly."""
    if not predicted and not gold:
        return 1.0
    tp = len(predicted & gold)
    if tp == 0:
        return 0.0
    precision, recall = tp / len(predicted), tp / len(gold)
    return 2 * precision * recall / (precision + recall)


def index_macro_f1(pairs: Sequence[Tuple[FrozenSet[int], FrozenSet[int]]]) -> float:
    """Macro F1 over premise positions, each position treated as a binary class."""
    classes = sorted(set().union(*(p | g for p, g in pairs))) if pairs else []
    if not classes:
        return 1.0
    scores = []
    for k in classes:
        tp = sum(k in p and k in g for p, g in pairs)
        fp = sum(k in p and k not in g for p, g in pairs)
        fn = sum(k not in p and k in g for p, g in pairs)
        scores.append(2 * tp / (2 * tp + fp + fn))
    return sum(scores) / len(scores)


def default_combined(accuracy: float, bias: float) -> float:
    """Placeholder combined score (not an official formula)."""
    return accuracy * (100.0 - bias) / 100.0


@dataclass(frozen=True)
class RunMetrics:
    accuracy: float
    premise_f1: float
    bias: float
    combined: float
    per_group_accuracy: Mapping[str, float]
    n: int
    warnings: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["per_group_accuracy"] = dict(self.per_group_accuracy)
        d["warnings"] = list(self.warnings)
        return d


@dataclass(frozen=True)
class RecordReport:
    id: str
    plausibility_group: str
    gold_validity: bool
    predicted_validity: bool
    basis: str
    gold_relevant: FrozenSet[int]
    predicted_relevant: FrozenSet[int]
    premise_f1: float
    error: Optional[str] = None

    @property
    def validity_correct(self) -> bool:
        return self.gold_validity == self.predicted_validity

    @property
    def relevance_exact(self) -> bool:
        return self.gold_relevant == self.predicted_relevant

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "plausibility_group": self.plausibility_group,
            "gold_validity": self.gold_validity,
            "predicted_validity": self.predicted_validity,
            "basis": self.basis,
            "gold_relevant": sorted(self.gold_relevant),
            "predicted_relevant": sorted(self.predicted_relevant),
            "premise_f1": round(self.premise_f1, 4),
            "validity_mismatch": not self.validity_correct,
            "relevance_mismatch": not self.relevance_exact,
            "error": self.error,
        }


@dataclass
class EvaluationReport:
    metrics: RunMetrics
    records: List[RecordReport] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "metrics": self.metrics.to_dict(),
            "records": [r.to_dict() for r in self.records],
        }

    def summary(self) -> str:
        m = self.metrics
        lines = [
            f"records        {m.n}",
            f"accuracy       {m.accuracy:.2f}",
            f"premise F1     {m.premise_f1:.2f}",
            f"bias           {m.bias:.2f}",
            f"combined*      {m.combined:.2f}",
        ]
        for group, acc in sorted(m.per_group_accuracy.items()):
            lines.append(f"  acc[{group}]{' ' * max(1, 13 - len(group))}{acc:.2f}")
        lines.append("* placeholder combined score, not the official formula")
        lines.extend(f"warning: {w}" for w in m.warnings)
        return "\n".join(lines)


def resolve_pipeline(pipeline: Union[str, Pipeline]) -> Pipeline:
    if callable(pipeline):
        return pipeline
    try:
        return PIPELINES[pipeline]
    except KeyError:
        raise ValueError(f"unknown pipeline {pipeline!r}; expected one of {', '.join(PIPELINES)}") from None


def evaluate(
    records: Sequence[DatasetRecord],
    pipeline: Union[str, Pipeline] = "rules",
    cfg: ValidityConfig = DEFAULT_CONFIG,
    *,
    f1_mode: str = "record",
    combined: Callable[[float, float], float] = default_combined,
    workers: int = 1,
) -> EvaluationReport:
    """Run ``pipeline`` over ``records`` and aggregate metrics (all in percent).

    ``f1_mode="record"`` averages per-record set F1; ``"index"`` macro-averages
    over premise positions instead.
    """
    if not records:
        raise ValueError("cannot evaluate an empty record list")
    if f1_mode not in ("record", "index"):
        raise ValueError(f"unknown f1_mode {f1_mode!r}")
    run = resolve_pipeline(pipeline)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            preds = dict(zip((r.id for r in records), pool.map(lambda r: run(r, cfg), records)))
    else:
        preds = {r.id: run(r, cfg) for r in records}

    reports = []
    for rec in sorted(records, key=lambda r: r.id):
        p = preds[rec.id]
        reports.append(RecordReport(
            id=rec.id,
            plausibility_group=rec.plausibility_group,
            gold_validity=rec.gold_validity,
            predicted_validity=p.valid,
            basis=p.basis,
            gold_relevant=rec.gold_relevant,
            predicted_relevant=p.relevant,
            premise_f1=set_f1(p.relevant, rec.gold_relevant),
            error=p.error,
        ))
    return EvaluationReport(compute_metrics(reports, f1_mode=f1_mode, combined=combined), reports)


def compute_metrics(
    reports: Sequence[RecordReport],
    *,
    f1_mode: str = "record",
    combined: Callable[[float, float], float] = default_combined,
) -> RunMetrics:
    n = len(reports)
    accuracy = 100.0 * sum(r.validity_correct for r in reports) / n
    if f1_mode == "record":
        premise_f1 = 100.0 * sum(r.premise_f1 for r in reports) / n
    else:
        premise_f1 = 100.0 * index_macro_f1([(r.predicted_relevant, r.gold_relevant) for r in reports])

    per_group: Dict[str, float] = {}
    for group in GROUPS:
        members = [r for r in reports if r.plausibility_group == group]
        if members:
            per_group[group] = 100.0 * sum(r.validity_correct for r in members) / len(members)

    warnings = []
    if "consistent" in per_group and "inconsistent" in per_group:
        bias = abs(per_group["consistent"] - per_group["inconsistent"])
    else:
        bias = 0.0
        msg = "bias needs both consistent and inconsistent records; reporting 0"
        logger.warning(msg)
        warnings.append(msg)

    return RunMetrics(
        accuracy=accuracy,
        premise_f1=premise_f1,
        bias=bias,
        combined=combined(accuracy, bias),
        per_group_accuracy=per_group,
        n=n,
        warnings=tuple(warnings),
    )
