"""Chat-completion gateway: live HTTP, scripted, recording and replay providers.

Cassettes are JSON lines of (request fingerprint, response). Replay consumes
entries strictly in order; a fingerprint mismatch and an exhausted cassette
are different failures so tests can tell them apart.
"""

import hashlib
import json
import os
import re
import time
from dataclasses import dataclass, field
from decimal import Decimal
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .core import SolveBenchError


class ProviderError(SolveBenchError):
    pass


class CassetteMismatch(ProviderError):
    pass


class CassetteExhausted(ProviderError):
    pass


class ExtractionError(SolveBenchError):
    pass


@dataclass(frozen=True)
class ChatMessage:
    role: str
    content: str


@dataclass(frozen=True)
class ChatRequest:
    model: str
    messages: Tuple[ChatMessage, ...]
    temperature: float
    max_tokens: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "messages", tuple(self.messages))


@dataclass(frozen=True)
class ChatResponse:
    text: str
    prompt_tokens: int = 0
    completion_tokens: int = 0
    model: str = ""


def fingerprint(request: ChatRequest) -> str:
    """Stable digest of model, temperature and the full message sequence."""
    h = hashlib.sha256()
    h.update(request.model.encode("utf-8"))
    h.update(("%.4f" % request.temperature).encode("ascii"))
    for msg in request.messages:
        h.update(b"\x1e")
        h.update(msg.role.encode("utf-8"))
        h.update(b"\x00")
        h.update(msg.content.encode("utf-8"))
    return h.hexdigest()


class ChatProvider:
    def complete(self, request: ChatRequest) -> ChatResponse:
        raise NotImplementedError


class HttpChatProvider(ChatProvider):
    """OpenAI-style chat completions over HTTP with retry and rate limiting."""

    RETRY_DELAYS = (1.0, 2.0, 4.0, 8.0, 16.0)

    def __init__(self, base_url: Optional[str] = None, api_key: Optional[str] = None,
                 requests_per_minute: float = 60.0, request_timeout: float = 120.0):
        self.base_url = (base_url or os.environ.get("LLM_BASE_URL")
                         or "https://api.openai.com/v1").rstrip("/")
        self.api_key = api_key or os.environ.get("LLM_API_KEY") or os.environ.get("OPENAI_API_KEY")
        self.min_interval = 60.0 / requests_per_minute if requests_per_minute > 0 else 0.0
        self.request_timeout = request_timeout
        self._last_start = 0.0

    def _throttle(self):
        now = time.monotonic()
        wait = self._last_start + self.min_interval - now
        if wait > 0:
            time.sleep(wait)
        self._last_start = time.monotonic()

    def complete(self, request: ChatRequest) -> ChatResponse:
        import requests  # deferred so replay-only runs never need it

        if not self.api_key:
            raise ProviderError("no API key configured (set LLM_API_KEY)")
        payload = {
            "model": request.model,
            "messages": [{"role": m.role, "content": m.content} for m in request.messages],
            "temperature": request.temperature,
        }
        if request.max_tokens is not None:
            payload["max_tokens"] = request.max_tokens
        url = self.base_url + "/chat/completions"
        headers = {"Authorization": "Bearer " + self.api_key}
        last_error = None
        for attempt, delay in enumerate((0.0,) + self.RETRY_DELAYS):
            if delay:
                time.sleep(delay)
            self._throttle()
            try:
                resp = requests.post(url, json=payload, headers=headers,
                                     timeout=self.request_timeout)
            except requests.RequestException as exc:
                last_error = "request failed: %s" % exc
                continue
            if resp.status_code == 429 or resp.status_code >= 500:
                last_error = "HTTP %d: %s" % (resp.status_code, resp.text[:200])
                continue
            if resp.status_code != 200:
                raise ProviderError("HTTP %d: %s" % (resp.status_code, resp.text[:500]))
            body = resp.json()
            try:
                choice = body["choices"][0]["message"]["content"]
            except (KeyError, IndexError, TypeError):
                raise ProviderError("malformed completion payload") from None
            usage = body.get("usage") or {}
            return ChatResponse(
                text=choice,
                prompt_tokens=int(usage.get("prompt_tokens", 0)),
                completion_tokens=int(usage.get("completion_tokens", 0)),
                model=body.get("model", request.model),
            )
        raise ProviderError("gave up after retries: %s" % last_error)


class ScriptedProvider(ChatProvider):
    """Returns canned texts in order; token counts derived from text length."""

    def __init__(self, texts: Sequence[str], model: str = "scripted"):
        self._texts = list(texts)
        self._next = 0
        self.model = model

    def complete(self, request: ChatRequest) -> ChatResponse:
        if self._next >= len(self._texts):
            raise ProviderError("scripted provider ran out of responses")
        text = self._texts[self._next]
        self._next += 1
        prompt_chars = sum(len(m.content) for m in request.messages)
        return ChatResponse(
            text=text,
            prompt_tokens=max(1, prompt_chars // 4),
            completion_tokens=max(1, len(text) // 4),
            model=self.model,
        )

    @property
    def remaining(self) -> int:
        return len(self._texts) - self._next


class CountingProvider(ChatProvider):
    """Wrapper that counts completions; used to audit call budgets."""

    def __init__(self, inner: ChatProvider):
        self.inner = inner
        self.calls = 0

    def complete(self, request: ChatRequest) -> ChatResponse:
        self.calls += 1
        return self.inner.complete(request)


class RecordingProvider(ChatProvider):
    """Proxies an inner provider and appends every exchange to a cassette."""

    def __init__(self, inner: ChatProvider, path):
        self.inner = inner
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text("")

    def complete(self, request: ChatRequest) -> ChatResponse:
        response = self.inner.complete(request)
        entry = {
            "fingerprint": fingerprint(request),
            "request": {
                "model": request.model,
                "temperature": request.temperature,
                "message_count": len(request.messages),
            },
            "response": {
                "text": response.text,
                "prompt_tokens": response.prompt_tokens,
                "completion_tokens": response.completion_tokens,
                "model": response.model,
            },
        }
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")
        return response


class ReplayProvider(ChatProvider):
    """Replays a cassette strictly in recording order."""

    def __init__(self, path):
        self.path = Path(path)
        if not self.path.is_file():
            raise ProviderError("cassette %s does not exist" % self.path)
        self._entries = []
        for lineno, line in enumerate(self.path.read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip():
                continue
            try:
                self._entries.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ProviderError("cassette %s line %d: %s" % (self.path, lineno, exc)) from None
        self._next = 0

    def complete(self, request: ChatRequest) -> ChatResponse:
        if self._next >= len(self._entries):
            raise CassetteExhausted(
                "cassette %s exhausted after %d entries" % (self.path, len(self._entries)))
        entry = self._entries[self._next]
        fp = fingerprint(request)
        if entry.get("fingerprint") != fp:
            raise CassetteMismatch(
                "cassette %s entry %d was recorded for a different request "
                "(want %s, cassette has %s)"
                % (self.path, self._next, fp[:12], str(entry.get("fingerprint"))[:12]))
        self._next += 1
        resp = entry["response"]
        return ChatResponse(
            text=resp["text"],
            prompt_tokens=int(resp.get("prompt_tokens", 0)),
            completion_tokens=int(resp.get("completion_tokens", 0)),
            model=resp.get("model", ""),
        )

    @property
    def remaining(self) -> int:
        return len(self._entries) - self._next


_FENCE_RE = re.compile(r"```([A-Za-z0-9_+-]*)[ \t]*\n(.*?)```", re.DOTALL)

_PLAIN_STARTS = {
    "python": ("import ", "from ", "def ", "class ", "#", "#!"),
    "smt2": ("(set-", "(declare", "(assert", "(define", "(check-sat", ";"),
}


def extract_code(text: str, language: str = "python") -> str:
    """Code from the first matching fence; tagged fences win over bare ones.

    Without any fence the whole text passes through only when it already
    starts like code for the requested language.
    """
    tagged = []
    bare = []
    for m in _FENCE_RE.finditer(text):
        tag = m.group(1).lower()
        body = m.group(2)
        if tag == language.lower() or (language == "python" and tag == "py"):
            tagged.append(body)
        elif tag == "":
            bare.append(body)
    if tagged:
        return tagged[0].strip("\n") + "\n"
    if bare:
        return bare[0].strip("\n") + "\n"
    stripped = text.strip()
    if not stripped:
        raise ExtractionError("response is empty")
    first_line = stripped.splitlines()[0].lstrip()
    starts = _PLAIN_STARTS.get(language, ())
    if any(first_line.startswith(s) for s in starts):
        return stripped + "\n"
    raise ExtractionError("no %s code fence found in response" % language)


# public per-1K-token prices; override via price_table arguments
DEFAULT_PRICE_TABLE: Dict[str, Tuple[Decimal, Decimal]] = {
    "gpt-4-turbo": (Decimal("0.01"), Decimal("0.03")),
    "gpt-4": (Decimal("0.03"), Decimal("0.06")),
    "gpt-4o": (Decimal("0.0025"), Decimal("0.01")),
    "gpt-3.5-turbo": (Decimal("0.0005"), Decimal("0.0015")),
}


@dataclass(frozen=True)
class CallRecord:
    problem: str
    method: str
    phase: str  # train or test
    model: str
    prompt_tokens: int
    completion_tokens: int


@dataclass
class CostLedger:
    records: List[CallRecord] = field(default_factory=list)

    def add(self, record: CallRecord):
        self.records.append(record)

    def total_cost(self, price_table: Optional[Dict[str, Tuple[Decimal, Decimal]]] = None) -> Decimal:
        table = price_table or DEFAULT_PRICE_TABLE
        total = Decimal(0)
        for rec in self.records:
            rates = table.get(rec.model)
            if rates is None:
                continue
            total += (Decimal(rec.prompt_tokens) * rates[0]
                      + Decimal(rec.completion_tokens) * rates[1]) / Decimal(1000)
        return total

    def call_count(self, phase: Optional[str] = None) -> int:
        if phase is None:
            return len(self.records)
        return sum(1 for r in self.records if r.phase == phase)

    def token_totals(self) -> Tuple[int, int]:
        return (sum(r.prompt_tokens for r in self.records),
                sum(r.completion_tokens for r in self.records))
