"""Prompt templates and rendering.

Templates live as plain text files under templates/ with {UPPER_CASE}
placeholders. Rendering is a single pass, so payload text containing braces
is never re-substituted. Rendered prompts must not name the problem: the
instance-agnostic rule/format texts carry all problem knowledge.
"""

import re
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Tuple

from .core import SolveBenchError

PLACEHOLDER_RE = re.compile(r"\{([A-Z][A-Z_]*)\}")

TEMPLATE_NAMES = (
    "fewshot",
    "pal",
    "solver_program",
    "logiclm_translate",
    "logiclm_format",
    "feedback_runtime",
    "feedback_wrong_output",
    "feedback_timeout",
    # search-style prompts kept as reference material; nothing renders them
    "tot_propose",
    "tot_value",
)

DEFAULT_SOLVER_INFO = (
    "The Z3 solver is available as an external command given by the "
    "SMT_SOLVER_CMD environment variable. Run it as a subprocess (for example "
    "with subprocess.run(shlex.split(os.environ['SMT_SOLVER_CMD']), ...)), "
    "write SMT-LIB2 text to its standard input, and read its standard output: "
    "the first line is sat, unsat or unknown, and after (get-model) the "
    "satisfying assignment follows as (define-fun ...) forms. There is no z3 "
    "Python module; only the standard library plus this command are available."
)


class TemplateError(SolveBenchError):
    pass


@dataclass(frozen=True)
class RenderedPrompt:
    template: str
    text: str
    fields: Tuple[Tuple[str, str], ...]


def load_template(name: str) -> str:
    if name not in TEMPLATE_NAMES:
        raise TemplateError("unknown template %r (known: %s)"
                            % (name, ", ".join(TEMPLATE_NAMES)))
    ref = resources.files("solvebench") / "templates" / (name + ".txt")
    return ref.read_text(encoding="utf-8")


def placeholders(template_text: str) -> List[str]:
    seen = []
    for m in PLACEHOLDER_RE.finditer(template_text):
        if m.group(1) not in seen:
            seen.append(m.group(1))
    return seen


def render(name: str, **fields: str) -> RenderedPrompt:
    """Fill every placeholder exactly once; unknown or missing fields fail."""
    template_text = load_template(name)
    wanted = placeholders(template_text)
    missing = [p for p in wanted if p not in fields]
    if missing:
        raise TemplateError("template %s missing fields: %s" % (name, ", ".join(missing)))
    extra = [f for f in fields if f not in wanted]
    if extra:
        raise TemplateError("template %s got unused fields: %s" % (name, ", ".join(extra)))

    def sub(m):
        return str(fields[m.group(1)]).rstrip("\n")

    text = PLACEHOLDER_RE.sub(sub, template_text)
    return RenderedPrompt(name, text, tuple(sorted((k, str(v)) for k, v in fields.items())))


def _join_samples(texts: List[str]) -> str:
    return "\n\n".join(t.rstrip("\n") for t in texts)


def fewshot_prompt(adapter, sample_pairs: List[Tuple[str, str]], instance_text: str) -> RenderedPrompt:
    return render(
        "fewshot",
        RULES=adapter.rules,
        INPUT_FORMAT=adapter.input_format,
        OUTPUT_FORMAT=adapter.output_format,
        SAMPLE_INPUT=_join_samples([p[0] for p in sample_pairs]),
        SAMPLE_OUTPUT=_join_samples([p[1] for p in sample_pairs]),
        INPUT=instance_text,
    )


def program_prompt(adapter, method: str, sample_pair: Tuple[str, str],
                   solver_info: str = DEFAULT_SOLVER_INFO) -> RenderedPrompt:
    """Base generation prompt for the program-writing methods."""
    if method == "pal":
        return render(
            "pal",
            RULES=adapter.rules,
            INPUT_FORMAT=adapter.input_format,
            OUTPUT_FORMAT=adapter.output_format,
            SAMPLE_INPUT=sample_pair[0],
            SAMPLE_OUTPUT=sample_pair[1],
        )
    if method == "solver_program":
        return render(
            "solver_program",
            RULES=adapter.rules,
            INPUT_FORMAT=adapter.input_format,
            OUTPUT_FORMAT=adapter.output_format,
            SAMPLE_INPUT=sample_pair[0],
            SAMPLE_OUTPUT=sample_pair[1],
            SOLVER_INFO=solver_info,
        )
    raise TemplateError("no program template for method %r" % method)


def logiclm_translate_prompt(adapter, sample_pair: Tuple[str, str],
                             instance_text: str) -> RenderedPrompt:
    return render(
        "logiclm_translate",
        RULES=adapter.rules,
        INPUT_FORMAT=adapter.input_format,
        OUTPUT_FORMAT=adapter.output_format,
        SAMPLE_INPUT=sample_pair[0],
        SAMPLE_OUTPUT=sample_pair[1],
        INPUT=instance_text,
    )


def logiclm_format_prompt(adapter, instance_text: str, solver_result: str) -> RenderedPrompt:
    return render(
        "logiclm_format",
        RULES=adapter.rules,
        INPUT=instance_text,
        OUTPUT_GENERATED=solver_result,
        OUTPUT_FORMAT=adapter.output_format,
    )


def feedback_prompt(kind: str, **payloads: str) -> RenderedPrompt:
    """kind is one of runtime, wrong_output, timeout."""
    name = "feedback_" + kind
    if name not in TEMPLATE_NAMES:
        raise TemplateError("unknown feedback kind %r" % kind)
    return render(name, **payloads)
