"""Provider plumbing: fingerprints, cassettes, code extraction, cost ledger."""

import json
from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from solvebench.llm import (
    CallRecord,
    CassetteExhausted,
    CassetteMismatch,
    ChatMessage,
    ChatRequest,
    ChatResponse,
    CostLedger,
    CountingProvider,
    ExtractionError,
    ProviderError,
    RecordingProvider,
    ReplayProvider,
    ScriptedProvider,
    extract_code,
    fingerprint,
)


def req(content="hello", model="m", temperature=0.0, role="user"):
    return ChatRequest(model=model,
                       messages=(ChatMessage(role, content),),
                       temperature=temperature)


message_texts = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",)), max_size=60)


class TestFingerprint:
    def test_stable(self):
        assert fingerprint(req()) == fingerprint(req())

    @given(message_texts, message_texts)
    def test_distinct_contents_distinct_digests(self, a, b):
        if a == b:
            return
        assert fingerprint(req(a)) != fingerprint(req(b))

    def test_temperature_matters(self):
        assert fingerprint(req(temperature=0.0)) != fingerprint(req(temperature=0.7))

    def test_model_matters(self):
        assert fingerprint(req(model="a")) != fingerprint(req(model="b"))

    def test_role_matters(self):
        assert fingerprint(req(role="user")) != fingerprint(req(role="system"))

    def test_message_boundary_not_ambiguous(self):
        # "ab"+"c" in one message must differ from "a"+"bc" split over two
        one = ChatRequest("m", (ChatMessage("user", "ab"), ChatMessage("user", "c")), 0.0)
        two = ChatRequest("m", (ChatMessage("user", "a"), ChatMessage("user", "bc")), 0.0)
        assert fingerprint(one) != fingerprint(two)

    def test_is_hex_sha256(self):
        fp = fingerprint(req())
        assert len(fp) == 64
        int(fp, 16)


class TestScriptedProvider:
    def test_returns_in_order(self):
        p = ScriptedProvider(["one", "two"])
        assert p.complete(req()).text == "one"
        assert p.complete(req()).text == "two"
        assert p.remaining == 0

    def test_exhaustion_raises(self):
        p = ScriptedProvider(["only"])
        p.complete(req())
        with pytest.raises(ProviderError, match="ran out"):
            p.complete(req())

    def test_token_counts_positive(self):
        p = ScriptedProvider(["x"])
        resp = p.complete(req("hi"))
        assert resp.prompt_tokens >= 1
        assert resp.completion_tokens >= 1


class TestCountingProvider:
    def test_counts_every_completion(self):
        p = CountingProvider(ScriptedProvider(["a", "b", "c"]))
        for _ in range(3):
            p.complete(req())
        assert p.calls == 3

    def test_counts_failures_too(self):
        p = CountingProvider(ScriptedProvider([]))
        with pytest.raises(ProviderError):
            p.complete(req())
        assert p.calls == 1


class TestRecordReplay:
    def test_cassette_entries_carry_fingerprints(self, tmp_path):
        cassette = tmp_path / "c.jsonl"
        p = RecordingProvider(ScriptedProvider(["alpha", "beta"]), cassette)
        p.complete(req("first"))
        p.complete(req("second"))
        lines = cassette.read_text().splitlines()
        assert len(lines) == 2
        entries = [json.loads(l) for l in lines]
        assert entries[0]["fingerprint"] == fingerprint(req("first"))
        assert entries[0]["response"]["text"] == "alpha"
        assert entries[1]["request"]["message_count"] == 1

    def test_replay_round_trip(self, tmp_path):
        cassette = tmp_path / "c.jsonl"
        rec = RecordingProvider(ScriptedProvider(["alpha", "beta"]), cassette)
        want = [rec.complete(req("first")), rec.complete(req("second"))]
        rep = ReplayProvider(cassette)
        got = [rep.complete(req("first")), rep.complete(req("second"))]
        for w, g in zip(want, got):
            assert g.text == w.text
            assert g.prompt_tokens == w.prompt_tokens
            assert g.completion_tokens == w.completion_tokens
        assert rep.remaining == 0

    def test_replay_mismatch_names_prefixes(self, tmp_path):
        cassette = tmp_path / "c.jsonl"
        RecordingProvider(ScriptedProvider(["alpha"]), cassette).complete(req("first"))
        rep = ReplayProvider(cassette)
        with pytest.raises(CassetteMismatch) as info:
            rep.complete(req("something else"))
        msg = str(info.value)
        assert fingerprint(req("something else"))[:12] in msg
        assert fingerprint(req("first"))[:12] in msg

    def test_replay_exhaustion(self, tmp_path):
        cassette = tmp_path / "c.jsonl"
        RecordingProvider(ScriptedProvider(["alpha"]), cassette).complete(req("first"))
        rep = ReplayProvider(cassette)
        rep.complete(req("first"))
        with pytest.raises(CassetteExhausted):
            rep.complete(req("first"))

    def test_missing_cassette(self, tmp_path):
        with pytest.raises(ProviderError, match="does not exist"):
            ReplayProvider(tmp_path / "absent.jsonl")

    def test_corrupt_cassette_line_number(self, tmp_path):
        cassette = tmp_path / "c.jsonl"
        cassette.write_text('{"ok": 1}\nnot json\n')
        with pytest.raises(ProviderError, match="line 2"):
            ReplayProvider(cassette)

    def test_recording_truncates_existing_file(self, tmp_path):
        cassette = tmp_path / "c.jsonl"
        cassette.write_text("stale\n")
        RecordingProvider(ScriptedProvider(["a"]), cassette)
        assert cassette.read_text() == ""


class TestExtractCode:
    def test_tagged_fence(self):
        text = "Here you go:\n```python\nprint(1)\n```\nEnjoy."
        assert extract_code(text) == "print(1)\n"

    def test_py_alias(self):
        assert extract_code("```py\nx = 1\n```") == "x = 1\n"

    def test_tagged_beats_earlier_bare(self):
        text = "```\nnot this\n```\n```python\nthis = 1\n```"
        assert extract_code(text) == "this = 1\n"

    def test_bare_fence_fallback(self):
        assert extract_code("```\ny = 2\n```") == "y = 2\n"

    def test_other_language_fence_ignored(self):
        with pytest.raises(ExtractionError):
            extract_code("```ruby\nputs 1\n```")

    def test_plain_python_passthrough(self):
        text = "import sys\nprint(sys.argv)"
        assert extract_code(text) == text + "\n"

    def test_plain_prose_rejected(self):
        with pytest.raises(ExtractionError, match="no python code fence"):
            extract_code("I am unable to help with that.")

    def test_empty_rejected(self):
        with pytest.raises(ExtractionError, match="empty"):
            extract_code("   \n  ")

    def test_smt2_plain_start(self):
        text = "(set-logic QF_LIA)\n(check-sat)"
        assert extract_code(text, "smt2") == text + "\n"

    def test_smt2_tagged_fence(self):
        assert extract_code("```smt2\n(check-sat)\n```", "smt2") == "(check-sat)\n"

    def test_first_tagged_fence_wins(self):
        text = "```python\na = 1\n```\n```python\nb = 2\n```"
        assert extract_code(text) == "a = 1\n"


class TestCostLedger:
    def test_total_cost_decimal_exact(self):
        ledger = CostLedger()
        ledger.add(CallRecord("p", "pal", "train", "gpt-4-turbo", 1000, 1000))
        # 1000 prompt at 0.01/1K plus 1000 completion at 0.03/1K
        assert ledger.total_cost() == Decimal("0.04")

    def test_unknown_model_costs_nothing(self):
        ledger = CostLedger()
        ledger.add(CallRecord("p", "pal", "train", "mystery", 5000, 5000))
        assert ledger.total_cost() == Decimal(0)

    def test_phase_counts(self):
        ledger = CostLedger()
        ledger.add(CallRecord("p", "pal", "train", "m", 1, 1))
        ledger.add(CallRecord("p", "pal", "train", "m", 1, 1))
        ledger.add(CallRecord("p", "fewshot", "test", "m", 1, 1))
        assert ledger.call_count() == 3
        assert ledger.call_count("train") == 2
        assert ledger.call_count("test") == 1

    def test_token_totals(self):
        ledger = CostLedger()
        ledger.add(CallRecord("p", "pal", "train", "m", 10, 4))
        ledger.add(CallRecord("p", "pal", "test", "m", 7, 2))
        assert ledger.token_totals() == (17, 6)

    def test_custom_price_table(self):
        ledger = CostLedger()
        ledger.add(CallRecord("p", "pal", "train", "local", 2000, 1000))
        table = {"local": (Decimal("0.001"), Decimal("0.002"))}
        assert ledger.total_cost(table) == Decimal("0.004")
