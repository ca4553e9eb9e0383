"""Remote (LLM) normalization: prompt rendering, wire format and fixture replay.

The remote side is a single text-completion endpoint. A request is one
JSON object ``{"model", "temperature", "seed", "prompt"}`` with decoding
pinned to temperature 0 and seed 0. The reply body is either the
completion text itself or a JSON object carrying it under ``"text"``,
``"completion"`` or ``"output"``. The completion must contain one JSON
object with the keys of the requested mode, optionally inside a
Markdown code fence.

Recorded replies live in a JSONL fixture file, one
``{"key", "mode", "raw", "response"}`` record per line, keyed by
:func:`fixture_key`.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import re
import threading
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional

logger = logging.getLogger(__name__)

MODES = ("english-norm", "epn-validity", "epn-relevance")
TEMPLATE_IDS = {
    "english-norm": "english_norm",
    "epn-validity": "epn_validity",
    "epn-relevance": "epn_relevance",
}
RESPONSE_KEYS = {
    "english-norm": ("reasoning", "mapped", "parsed"),
    "epn-validity": ("detected_language", "reasoning", "english"),
    "epn-relevance": ("detected_language", "reasoning", "english"),
}

ENV_ENDPOINT = "SYLLOSTRUCT_ENDPOINT"
ENV_MODEL = "SYLLOSTRUCT_MODEL"
ENV_API_KEY = "SYLLOSTRUCT_API_KEY"
ENV_CONFIG = "SYLLOSTRUCT_CONFIG"


class TransportError(RuntimeError):
    pass


class MalformedResponse(ValueError):
    pass


class FixtureMiss(LookupError):
    pass


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    return mode


def load_template(mode: str) -> str:
    name = TEMPLATE_IDS[_check_mode(mode)] + ".txt"
    return resources.files("syllostruct.normalization").joinpath("prompts", name).read_text(encoding="utf-8")


def render_prompt(mode: str, raw: str) -> str:
    # templates use doubled braces for literal JSON braces
    template = load_template(mode)
    return template.replace("{syllogism}", raw).replace("{{", "{").replace("}}", "}")


def fixture_key(mode: str, raw: str) -> str:
    payload = "\x1f".join((_check_mode(mode), TEMPLATE_IDS[mode], raw))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


_FENCE = re.compile(r"```(?:json|JSON)?\s*(.*?)```", re.S)


def extract_object(text: str, required: Iterable[str] = ()) -> dict:
    """Pull the first JSON object out of a completion, unwrapping code fences."""
    candidates = [m.group(1) for m in _FENCE.finditer(text)] + [text]
    decoder = json.JSONDecoder()
    for chunk in candidates:
        for start in (i for i, ch in enumerate(chunk) if ch == "{"):
            try:
                obj, _ = decoder.raw_decode(chunk, start)
            except json.JSONDecodeError:
                continue
            if isinstance(obj, dict):
                missing = [k for k in required if k not in obj]
                if missing:
                    raise MalformedResponse(f"response object lacks keys {missing}")
                return obj
    raise MalformedResponse("no JSON object found in response")


class FixtureStore:
    """Thread-safe map of recorded responses, optionally backed by a JSONL file."""

    def __init__(self, records: Iterable[Mapping] = (), path: Optional[Path] = None):
        self.path = Path(path) if path else None
        self._lock = threading.Lock()
        self._records: Dict[str, dict] = {}
        for rec in records:
            self._records[rec["key"]] = dict(rec)

    @classmethod
    def load(cls, path) -> "FixtureStore":
        path = Path(path)
        records = []
        with path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ValueError(f"{path}:{lineno}: {exc}") from None
                missing = {"key", "mode", "raw", "response"} - rec.keys()
                if missing:
                    raise ValueError(f"{path}:{lineno}: missing fields {sorted(missing)}")
                records.append(rec)
        return cls(records, path=path)

    @classmethod
    def bundled(cls) -> "FixtureStore":
        ref = resources.files("syllostruct").joinpath("data", "llm_fixtures.jsonl")
        with resources.as_file(ref) as p:
            return cls.load(p)

    def __len__(self):
        return len(self._records)

    def __contains__(self, key):
        return key in self._records

    def get(self, mode: str, raw: str) -> str:
        key = fixture_key(mode, raw)
        with self._lock:
            rec = self._records.get(key)
        if rec is None:
            raise FixtureMiss(f"no recorded response for mode={mode!r} raw={raw[:60]!r} (key {key[:12]})")
        return rec["response"]

    def record(self, mode: str, raw: str, response: str) -> dict:
        rec = {"key": fixture_key(mode, raw), "mode": mode, "raw": raw, "response": response}
        with self._lock:
            self._records[rec["key"]] = rec
            if self.path is not None:
                with self.path.open("a", encoding="utf-8") as fh:
                    fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
        return rec


@dataclass(frozen=True)
class RemoteConfig:
    endpoint: str
    model: str = "gemini-3-flash-preview"
    api_key: Optional[str] = None
    timeout: float = 60.0
    max_in_flight: int = 4

    @classmethod
    def from_env(cls, config_path=None, environ: Mapping[str, str] = os.environ) -> "RemoteConfig":
        """Read a JSON config file (if given or named by the environment), then let env vars override."""
        values: dict = {}
        config_path = config_path or environ.get(ENV_CONFIG)
        if config_path:
            values.update(json.loads(Path(config_path).read_text(encoding="utf-8")))
        for key, env in (("endpoint", ENV_ENDPOINT), ("model", ENV_MODEL), ("api_key", ENV_API_KEY)):
            if environ.get(env):
                values[key] = environ[env]
        if not values.get("endpoint"):
            raise ValueError(f"no remote endpoint configured; set {ENV_ENDPOINT} or pass a config file")
        return cls(**values)


def build_request(cfg: RemoteConfig, prompt: str) -> dict:
    return {"model": cfg.model, "temperature": 0, "seed": 0, "prompt": prompt}


class RemoteClient:
    def __init__(self, cfg: RemoteConfig, record_to: Optional[FixtureStore] = None):
        self.cfg = cfg
        self.record_to = record_to

    def complete(self, prompt: str) -> str:
        body = json.dumps(build_request(self.cfg, prompt)).encode("utf-8")
        headers = {"Content-Type": "application/json"}
        if self.cfg.api_key:
            headers["Authorization"] = f"Bearer {self.cfg.api_key}"
        req = urllib.request.Request(self.cfg.endpoint, data=body, headers=headers, method="POST")
        try:
            with urllib.request.urlopen(req, timeout=self.cfg.timeout) as resp:
                text = resp.read().decode("utf-8")
        except (urllib.error.URLError, OSError) as exc:
            raise TransportError(f"request to {self.cfg.endpoint} failed: {exc}") from exc
        return _completion_text(text)

    def respond(self, mode: str, raw: str) -> str:
        text = self.complete(render_prompt(mode, raw))
        if self.record_to is not None:
            self.record_to.record(mode, raw, text)
        return text

    def respond_many(self, mode: str, raws: List[str]) -> List[str]:
        """Concurrent :meth:`respond`; output order follows input order."""
        with ThreadPoolExecutor(max_workers=max(1, self.cfg.max_in_flight)) as pool:
            futures = {i: pool.submit(self.respond, mode, raw) for i, raw in enumerate(raws)}
            return [futures[i].result() for i in range(len(raws))]


def _completion_text(body: str) -> str:
    try:
        obj = json.loads(body)
    except json.JSONDecodeError:
        return body
    if isinstance(obj, dict):
        for key in ("text", "completion", "output"):
            if isinstance(obj.get(key), str):
                return obj[key]
    return body
