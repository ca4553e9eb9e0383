"""Command-line entry point: ``syllostruct <command> ...``.

Exit codes: 0 success, 2 input or usage error, 3 oracle/table mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import validity
from .core import Figure, MoodFigure, TrivialKind, ValidityVerdict
from .evaluation import SCHEMA_VERSION, DatasetError, evaluate, load_dataset, resolve_pipeline
from .normalization import (
    ENGINES,
    MODES,
    FixtureMiss,
    FixtureStore,
    MalformedResponse,
    NotNormalizable,
    RemoteClient,
    RemoteConfig,
    TransportError,
    normalize_argument,
    normalize_en,
)
from .oracle import valid_forms
from .parsing import ParseFailure, parse_canonical, parse_sentence, split_sentences
from .relevance import select_relevant

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 2, 3


class InputError(Exception):
    pass


def _read_text(args) -> str:
    if getattr(args, "file", None):
        try:
            return Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    if args.text == "-":
        return sys.stdin.read()
    if args.text is None:
        raise InputError("give an argument text or --file")
    return args.text


def _emit_json(obj) -> None:
    print(json.dumps({"schema_version": SCHEMA_VERSION, **obj}, ensure_ascii=False, sort_keys=True))


def _verdict_dict(verdict: ValidityVerdict) -> dict:
    d = {"valid": verdict.valid, "basis_kind": verdict.basis_kind, "basis": str(verdict.basis), "mood": None, "figure": None}
    if isinstance(verdict.basis, MoodFigure):
        d["mood"] = str(verdict.basis.mood)
        d["figure"] = int(verdict.basis.figure)
    return d


def _config(args) -> validity.ValidityConfig:
    rules = None
    if getattr(args, "trivial", None) is not None:
        names = [n.strip() for n in args.trivial.split(",") if n.strip()]
        try:
            rules = frozenset(TrivialKind(n.replace(" ", "_").replace("-", "_")) for n in names)
        except ValueError as exc:
            raise InputError(f"unknown trivial rule: {exc}") from None
    try:
        return validity.ValidityConfig(existential_import=not args.no_import, enabled_trivial_rules=rules)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_parse(args) -> int:
    text = _read_text(args)
    try:
        syl = parse_canonical(text)
    except ParseFailure as exc:
        if args.json:
            _emit_json({"ok": False, "error": exc.kind.value, "offending_text": exc.offending_text})
        else:
            print(f"parse failure: {exc.kind.value}: {exc.offending_text!r}", file=sys.stderr)
        return EXIT_INPUT
    props = syl.propositions
    if args.json:
        _emit_json({
            "ok": True,
            "propositions": [
                {"role": "premise" if i < len(props) - 1 else "conclusion", "form": p.form.value,
                 "subject": p.subject.text, "predicate": p.predicate.text}
                for i, p in enumerate(props)
            ],
            "terms": [t.text for t in syl.terms()],
        })
    else:
        for i, p in enumerate(props):
            role = f"P{i + 1}" if i < len(props) - 1 else "C "
            print(f"{role} {p.form.value}  {p.subject.text} | {p.predicate.text}")
        print("terms: " + ", ".join(t.text for t in syl.terms()))
    return EXIT_OK


def cmd_validate(args) -> int:
    cfg = _config(args)
    verdict = validity.judge(_read_text(args), cfg)
    if args.json:
        _emit_json(_verdict_dict(verdict))
    else:
        print(verdict)
    return EXIT_OK


def _relevance_inputs(text: str, english: bool):
    if english:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) < 2:
            raise InputError("need at least one premise line and a conclusion line")
        try:
            props = [normalize_en(ln) for ln in lines]
        except NotNormalizable as exc:
            raise InputError(str(exc)) from None
    else:
        props = []
        for seg in split_sentences(text):
            try:
                props.append(parse_sentence(seg))
            except ParseFailure as exc:
                raise InputError(f"{exc.kind.value}: {seg!r}") from None
        if len(props) < 2:
            raise InputError("need at least one premise and a conclusion")
    return props[:-1], props[-1]


def cmd_relevance(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    premises, conclusion = _relevance_inputs(text, args.english)
    verdict, rel = select_relevant(premises, conclusion, _config(args))
    indices = sorted(rel)
    if args.json:
        _emit_json({**_verdict_dict(verdict), "relevant": indices})
    else:
        print(verdict)
        print(json.dumps(indices))
    return EXIT_OK


def cmd_oracle(args) -> int:
    derived = valid_forms(existential_import=args.import_, max_universe=args.max_universe)
    builtin = validity.table_for(validity.ValidityConfig(existential_import=args.import_))
    print(validity.format_table(derived))
    print(f"{sum(len(v) for v in derived.values())} valid forms")
    if not args.diff_table:
        return EXIT_OK
    mismatch = False
    for figure in Figure:
        extra = sorted(derived[figure] - builtin[figure])
        missing = sorted(builtin[figure] - derived[figure])
        if extra or missing:
            mismatch = True
            print(f"figure {int(figure)}: oracle-only {extra or '-'}; table-only {missing or '-'}")
    if mismatch:
        return EXIT_MISMATCH
    print("built-in table matches the oracle")
    return EXIT_OK


def cmd_table(args) -> int:
    print(validity.format_table(validity.table_for(validity.ValidityConfig(existential_import=not args.no_import))))
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        resolve_pipeline(args.pipeline)
        records = load_dataset(args.dataset)
    except OSError as exc:
        raise InputError(f"cannot read {args.dataset}: {exc.strerror}") from None
    except (DatasetError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if not records:
        raise InputError(f"{args.dataset} contains no records")
    report = evaluate(records, args.pipeline, _config(args), f1_mode=args.f1_mode, workers=args.workers)
    if args.metrics_out:
        Path(args.metrics_out).write_text(json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    if args.json:
        _emit_json({"metrics": report.metrics.to_dict()})
    else:
        print(report.summary())
    return EXIT_OK


def cmd_normalize(args) -> int:
    raw = _read_text(args)
    fixtures = client = None
    try:
        if args.engine == "fixture" and args.fixtures:
            fixtures = FixtureStore.load(args.fixtures)
        if args.engine == "remote":
            record_to = None
            if args.record:
                path = Path(args.record)
                record_to = FixtureStore.load(path) if path.exists() else FixtureStore(path=path)
            client = RemoteClient(RemoteConfig.from_env(args.config), record_to=record_to)
        result = normalize_argument(raw, args.mode, args.engine, fixtures=fixtures, client=client)
    except (ValueError, FixtureMiss, MalformedResponse, TransportError, OSError) as exc:
        raise InputError(str(exc)) from None
    if args.json:
        _emit_json(result.to_dict())
    else:
        if result.mapped:
            print(f"mapped: {result.mapped}")
        if result.detected_language:
            print(f"language: {result.detected_language}")
        print(f"parsed: {result.parsed}")
        for w in result.warnings:
            print(f"warning: {w}")
        print(f"verdict: {validity.judge(result.parsed)}")
    return EXIT_OK


def _add_text(p: argparse.ArgumentParser) -> None:
    p.add_argument("text", nargs="?", help="argument text; '-' reads stdin")
    p.add_argument("-f", "--file", help="read the argument from a file")


def _add_validity_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--no-import", action="store_true", help="allow empty terms (no existential import)")
    p.add_argument("--trivial", metavar="RULES",
                   help="comma-separated trivial rules to enable (empty string disables all); "
                        + ", ".join(k.value for k in TrivialKind))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="syllostruct", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a canonical argument")
    _add_text(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("validate", help="judge validity of a canonical argument")
    _add_text(p)
    _add_validity_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("relevance", help="select the premises supporting the conclusion")
    p.add_argument("file", help="sentences, conclusion last")
    p.add_argument("--english", action="store_true", help="one English sentence per line, read with paraphrase rules")
    _add_validity_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_relevance)

    p = sub.add_parser("oracle", help="derive the valid-form table by model enumeration")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--import", dest="import_", action="store_true", default=True)
    g.add_argument("--no-import", dest="import_", action="store_false")
    p.add_argument("--max-universe", type=int, default=4)
    p.add_argument("--diff-table", action="store_true", help="exit 3 if the built-in table differs")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", help="print the built-in valid-form table")
    p.add_argument("--no-import", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eval", help="evaluate a pipeline on a JSONL dataset")
    p.add_argument("dataset")
    p.add_argument("--pipeline", default="rules")
    p.add_argument("--metrics-out", help="write metrics and per-record report as JSON")
    p.add_argument("--f1-mode", choices=("record", "index"), default="record")
    p.add_argument("--workers", type=int, default=1)
    _add_validity_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("normalize", help="normalize a natural-language argument")
    _add_text(p)
    p.add_argument("--mode", choices=MODES, default="english-norm")
    p.add_argument("--engine", choices=ENGINES, default="rules")
    p.add_argument("--fixtures", help="fixture JSONL for the fixture engine (default: bundled)")
    p.add_argument("--config", help="JSON config for the remote engine")
    p.add_argument("--record", help="append remote responses to this fixture file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_normalize)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
