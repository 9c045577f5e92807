"""Scoring, aggregation and report emission.

report.json is byte-identical across repeated replay runs: it carries no wall
times, timestamps or machine-local paths. Timing lives in timings.json.
"""

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import SizeDescriptor, SolveBenchError
from .sandbox import LOGIC_OUTCOME_KINDS, OUTCOME_KINDS

METHODS = ("fewshot", "pal", "logiclm", "solver_program")

METHOD_DISPLAY = {
    "fewshot": "Few-Shot",
    "pal": "PAL",
    "logiclm": "Logic-LM",
    "solver_program": "Solver-Program",
}

EXEC_TAXONOMY = OUTCOME_KINDS
LOGIC_TAXONOMY = LOGIC_OUTCOME_KINDS

METHOD_TAXONOMY = {
    "fewshot": EXEC_TAXONOMY,
    "pal": EXEC_TAXONOMY,
    "solver_program": EXEC_TAXONOMY,
    "logiclm": LOGIC_TAXONOMY,
}

STAGES = ("initial", "refined")


class ReportError(SolveBenchError):
    pass


@dataclass(frozen=True)
class InstanceResult:
    problem: str
    method: str
    stage: str  # initial or refined
    index: int
    size: str
    outcome: str
    detail: str = ""

    def __post_init__(self):
        if self.stage not in STAGES:
            raise ReportError("bad stage %r" % self.stage)
        if self.method not in METHODS:
            raise ReportError("bad method %r" % self.method)
        if self.outcome not in METHOD_TAXONOMY[self.method]:
            raise ReportError("outcome %r not in the %s taxonomy"
                              % (self.outcome, self.method))


def _select(rows: Iterable[InstanceResult], problem: Optional[str],
            method: Optional[str], stage: Optional[str]) -> List[InstanceResult]:
    return [r for r in rows
            if (problem is None or r.problem == problem)
            and (method is None or r.method == method)
            and (stage is None or r.stage == stage)]


def score(rows: Iterable[InstanceResult], problem: Optional[str] = None,
          method: Optional[str] = None, stage: str = "refined") -> Tuple[int, int]:
    """(correct, total) over the selected rows."""
    picked = _select(rows, problem, method, stage)
    return sum(1 for r in picked if r.outcome == "Correct"), len(picked)


def accuracy(rows: Iterable[InstanceResult], problem: Optional[str] = None,
             method: Optional[str] = None, stage: str = "refined") -> Optional[float]:
    correct, total = score(rows, problem, method, stage)
    if total == 0:
        return None
    return correct / total


def macro_average(values: Sequence[Optional[float]]) -> Optional[float]:
    """Unweighted mean over per-problem accuracies; None entries are skipped."""
    present = [v for v in values if v is not None]
    if not present:
        return None
    return sum(present) / len(present)


def outcome_histogram(rows: Iterable[InstanceResult], method: str,
                      stage: str = "refined") -> Dict[str, int]:
    """Counts for every taxonomy kind; the kinds partition the rows."""
    histogram = {kind: 0 for kind in METHOD_TAXONOMY[method]}
    for row in _select(rows, None, method, stage):
        histogram[row.outcome] += 1
    return histogram


def size_breakdown(rows: Iterable[InstanceResult], problem: str, method: str,
                   stage: str = "refined") -> List[Dict[str, object]]:
    """Per-size buckets; bucket counts always sum to the row total."""
    buckets: Dict[str, List[InstanceResult]] = {}
    for row in _select(rows, problem, method, stage):
        buckets.setdefault(row.size, []).append(row)

    def sort_key(encoded: str):
        return tuple(SizeDescriptor.decode(encoded).items())

    out = []
    for size in sorted(buckets, key=sort_key):
        group = buckets[size]
        correct = sum(1 for r in group if r.outcome == "Correct")
        out.append({"size": size, "count": len(group), "correct": correct})
    return out


class ExperimentReport:
    """Thin wrapper over a plain dict so emit/parse is an exact identity."""

    SCHEMA = "solvebench-report-1"

    def __init__(self, data: Dict[str, object]):
        if data.get("schema") != self.SCHEMA:
            raise ReportError("unknown report schema %r" % data.get("schema"))
        self.data = data

    def __eq__(self, other):
        return isinstance(other, ExperimentReport) and self.data == other.data


def build_report(config, rows: Sequence[InstanceResult], ledger,
                 refinement: Optional[Dict[str, Dict[str, object]]] = None,
                 selection: Optional[Dict[str, Dict[str, object]]] = None) -> ExperimentReport:
    problems = sorted({r.problem for r in rows})
    methods = [m for m in METHODS if any(r.method == m for r in rows)]
    acc: Dict[str, Dict[str, Dict[str, Optional[float]]]] = {}
    for problem in problems:
        acc[problem] = {}
        for method in methods:
            acc[problem][method] = {
                stage: accuracy(rows, problem, method, stage) for stage in STAGES}
    macro = {}
    for method in methods:
        macro[method] = {
            stage: macro_average([acc[p][method][stage] for p in problems])
            for stage in STAGES}
    histogram = {m: outcome_histogram(rows, m) for m in methods}
    sizes = {p: {m: size_breakdown(rows, p, m) for m in methods} for p in problems}
    prompt_tokens, completion_tokens = ledger.token_totals()
    by_method = {}
    for method in methods:
        by_method[method] = {
            "train": sum(1 for r in ledger.records
                         if r.method == method and r.phase == "train"),
            "test": sum(1 for r in ledger.records
                        if r.method == method and r.phase == "test"),
        }
    data = {
        "schema": ExperimentReport.SCHEMA,
        "config_digest": config.digest(),
        "model": config.model,
        "protocol": {
            "runs": config.runs,
            "feedback_rounds": config.feedback_rounds,
            "solved_examples": config.solved_examples,
            "time_limit": config.time_limit,
            "seed": config.seed,
        },
        "problems": problems,
        "methods": methods,
        "accuracy": acc,
        "macro": macro,
        "histogram": histogram,
        "size_breakdown": sizes,
        "refinement": refinement or {},
        "selection": selection or {},
        "calls": {
            "train": ledger.call_count("train"),
            "test": ledger.call_count("test"),
            "by_method": by_method,
        },
        "tokens": {"prompt": prompt_tokens, "completion": completion_tokens},
        "cost": {"total": str(ledger.total_cost()), "unit": "USD"},
        "counts": {
            "test_instances": len({(r.problem, r.index) for r in rows}),
        },
    }
    return ExperimentReport(data)


def emit(report: ExperimentReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.data, sort_keys=True, indent=2) + "\n"
    if fmt == "markdown":
        return _emit_markdown(report)
    if fmt == "csv":
        return _emit_csv(report)
    raise ReportError("unknown report format %r" % fmt)


def parse_report(text: str) -> ExperimentReport:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportError("report is not valid JSON: %s" % exc) from None
    if not isinstance(data, dict):
        raise ReportError("report must be a JSON object")
    return ExperimentReport(data)


def _pct(value: Optional[float]) -> str:
    if value is None:
        return "-"
    return "%.1f" % (100.0 * value)


def _emit_markdown(report: ExperimentReport) -> str:
    data = report.data
    methods = data["methods"]
    problems = data["problems"]
    lines = ["# Benchmark results", ""]
    lines.append("Model: %s. Protocol: runs=%d, feedback_rounds=%d, solved_examples=%d."
                 % (data["model"], data["protocol"]["runs"],
                    data["protocol"]["feedback_rounds"],
                    data["protocol"]["solved_examples"]))
    lines.append("")
    lines.append("## Accuracy (percent of test instances)")
    lines.append("")
    header = ["Problem"]
    columns: List[Tuple[str, str]] = []
    for method in METHODS:
        if method not in methods:
            continue
        if method == "fewshot":
            header.append(METHOD_DISPLAY[method])
            columns.append((method, "refined"))
        else:
            header.append(METHOD_DISPLAY[method] + " -R")
            header.append(METHOD_DISPLAY[method] + " +R")
            columns.append((method, "initial"))
            columns.append((method, "refined"))
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "---|" * len(header))
    for problem in problems:
        cells = [problem]
        for method, stage in columns:
            cells.append(_pct(data["accuracy"][problem][method][stage]))
        lines.append("| " + " | ".join(cells) + " |")
    cells = ["Macro average"]
    for method, stage in columns:
        cells.append(_pct(data["macro"][method][stage]))
    lines.append("| " + " | ".join(cells) + " |")
    lines.append("")
    lines.append("-R: the first generated program, +R: after feedback refinement.")
    lines.append("")
    lines.append("## Outcome counts (after refinement)")
    lines.append("")
    kinds: List[str] = []
    for method in methods:
        for kind in METHOD_TAXONOMY[method]:
            if kind not in kinds:
                kinds.append(kind)
    lines.append("| Outcome | " + " | ".join(METHOD_DISPLAY[m] for m in methods) + " |")
    lines.append("|" + "---|" * (len(methods) + 1))
    for kind in kinds:
        cells = [kind]
        for method in methods:
            hist = data["histogram"][method]
            cells.append(str(hist[kind]) if kind in hist else "-")
        lines.append("| " + " | ".join(cells) + " |")
    lines.append("")
    lines.append("LLM calls: %d during training, %d at test time. Cost: %s %s."
                 % (data["calls"]["train"], data["calls"]["test"],
                    data["cost"]["total"], data["cost"]["unit"]))
    return "\n".join(lines) + "\n"


def _emit_csv(report: ExperimentReport) -> str:
    import csv
    import io

    data = report.data
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["problem", "method", "stage", "accuracy"])
    for problem in data["problems"]:
        for method in data["methods"]:
            for stage in STAGES:
                value = data["accuracy"][problem][method][stage]
                writer.writerow([problem, method, stage,
                                 "" if value is None else "%.6f" % value])
    return buf.getvalue()
