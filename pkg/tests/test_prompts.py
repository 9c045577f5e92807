"""Template rendering contract: exact text, strict fields, single pass."""

from pathlib import Path

import pytest

from solvebench import all_problem_ids, get_problem
from solvebench.prompts import (
    DEFAULT_SOLVER_INFO,
    TEMPLATE_NAMES,
    TemplateError,
    feedback_prompt,
    fewshot_prompt,
    load_template,
    logiclm_format_prompt,
    logiclm_translate_prompt,
    placeholders,
    program_prompt,
    render,
)

DATA = Path(__file__).parent / "data"


class FakeAdapter:
    rules = "Fill the grid.\nNo repeats."
    input_format = "n lines of n integers."
    output_format = "n lines of n integers, no zeros."


def golden(name: str) -> str:
    return (DATA / ("golden_%s_prompt.txt" % name)).read_text(encoding="utf-8")


class TestGoldenRenders:
    def test_pal(self):
        rp = program_prompt(FakeAdapter(), "pal", ("1 0\n0 2\n", "1 2\n1 2\n"))
        assert rp.text == golden("pal")

    def test_solver_program(self):
        rp = program_prompt(FakeAdapter(), "solver_program",
                            ("1 0\n0 2\n", "1 2\n1 2\n"),
                            solver_info="solver info goes here")
        assert rp.text == golden("solver_program")

    def test_fewshot_joins_pairs_with_blank_line(self):
        rp = fewshot_prompt(FakeAdapter(), [("1 0\n", "1\n"), ("0 2\n", "2\n")],
                            "0 0\n")
        assert rp.text == golden("fewshot")
        assert "1 0\n\n0 2" in rp.text
        assert "1\n\n2" in rp.text

    def test_feedback_wrong_output(self):
        rp = feedback_prompt("wrong_output", INPUT="1 0\n",
                             OUTPUT_GENERATED="9 9\n", GOLD_OUTPUT="1 2\n")
        assert rp.text == golden("feedback_wrong_output")


class TestRenderContract:
    def test_no_leftover_placeholders_across_problems(self):
        for pid in all_problem_ids():
            adapter = get_problem(pid)
            pair = adapter.sample_pair()
            texts = [
                fewshot_prompt(adapter, [pair], pair[0]).text,
                program_prompt(adapter, "pal", pair).text,
                program_prompt(adapter, "solver_program", pair).text,
                logiclm_translate_prompt(adapter, pair, pair[0]).text,
                logiclm_format_prompt(adapter, pair[0], "sat\n(model)").text,
            ]
            for text in texts:
                assert not placeholders(text), (pid, placeholders(text))

    def test_missing_field_raises(self):
        with pytest.raises(TemplateError, match="missing fields"):
            render("feedback_timeout", INPUT="1\n")

    def test_extra_field_raises(self):
        with pytest.raises(TemplateError, match="unused fields"):
            render("feedback_timeout", INPUT="1\n", TIME_LIMIT="60",
                   BOGUS="x")

    def test_unknown_template_raises(self):
        with pytest.raises(TemplateError, match="unknown template"):
            load_template("nonsense")

    def test_unknown_feedback_kind_raises(self):
        with pytest.raises(TemplateError, match="unknown feedback kind"):
            feedback_prompt("sideways", INPUT="1\n")

    def test_single_pass_substitution(self):
        # braces inside a payload must survive literally
        rp = feedback_prompt("runtime", RUNTIME_ERROR="KeyError: '{INPUT}'",
                             INPUT="1 0\n")
        assert "KeyError: '{INPUT}'" in rp.text

    def test_payload_trailing_newline_trimmed(self):
        rp = feedback_prompt("timeout", TIME_LIMIT="60", INPUT="1 0\n")
        assert "1 0\n\n" not in rp.text

    def test_fields_recorded_sorted(self):
        rp = feedback_prompt("timeout", TIME_LIMIT="60", INPUT="1 0\n")
        assert [k for k, _ in rp.fields] == ["INPUT", "TIME_LIMIT"]


class TestSolverInfo:
    def test_default_names_the_env_command(self):
        assert "SMT_SOLVER_CMD" in DEFAULT_SOLVER_INFO
        rp = program_prompt(FakeAdapter(), "solver_program", ("1\n", "2\n"))
        assert "SMT_SOLVER_CMD" in rp.text

    def test_custom_info_is_injected(self):
        rp = program_prompt(FakeAdapter(), "solver_program", ("1\n", "2\n"),
                            solver_info="use the magic box")
        assert "use the magic box" in rp.text
        assert "SMT_SOLVER_CMD" not in rp.text

    def test_pal_has_no_solver_info(self):
        with pytest.raises(TemplateError, match="no program template"):
            program_prompt(FakeAdapter(), "fewshot", ("1\n", "2\n"))


class TestTemplateInventory:
    def test_all_templates_load(self):
        for name in TEMPLATE_NAMES:
            text = load_template(name)
            assert text.strip()

    def test_feedback_placeholder_sets(self):
        assert placeholders(load_template("feedback_runtime")) == [
            "RUNTIME_ERROR", "INPUT"]
        assert placeholders(load_template("feedback_wrong_output")) == [
            "INPUT", "OUTPUT_GENERATED", "GOLD_OUTPUT"]
        assert placeholders(load_template("feedback_timeout")) == [
            "TIME_LIMIT", "INPUT"]
