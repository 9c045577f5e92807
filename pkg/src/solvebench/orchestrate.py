"""Experiment orchestration: refinement loops, method drivers, config parsing.

The program-writing methods talk to the LLM only while refining against the
solved training examples; the selected program then runs on the test set with
zero further LLM calls. The per-instance methods (fewshot, logiclm) call the
LLM at test time instead.
"""

import concurrent.futures
import hashlib
import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import smt
from .core import (
    Dataset,
    GoldSolutionSet,
    Instance,
    SizeDescriptor,
    SolveBenchError,
    build_dataset,
    load_dataset,
)
from .llm import (
    CallRecord,
    CassetteExhausted,
    CassetteMismatch,
    ChatMessage,
    ChatRequest,
    ChatProvider,
    CostLedger,
    CountingProvider,
    ExtractionError,
    HttpChatProvider,
    ProviderError,
    RecordingProvider,
    ReplayProvider,
    ScriptedProvider,
    extract_code,
)
from .prompts import (
    DEFAULT_SOLVER_INFO,
    feedback_prompt,
    fewshot_prompt,
    logiclm_format_prompt,
    logiclm_translate_prompt,
    program_prompt,
)
from .report import METHODS, InstanceResult, build_report, emit
from .sandbox import Outcome, run_candidate

DEFAULT_TEMPERATURE = {
    "fewshot": 0.0,
    "logiclm": 0.0,
    "pal": 0.7,
    "solver_program": 0.7,
}

NO_OUTPUT_MARKER = "<no output>"


class ConfigError(SolveBenchError):
    pass


@dataclass
class RunConfig:
    method: str = "solver_program"
    model: str = "gpt-4-turbo"
    runs: int = 5
    feedback_rounds: int = 4
    solved_examples: int = 10
    temperature: Optional[float] = None
    time_limit: float = 60.0
    parallelism: int = 1
    sample_count: int = 1
    solver_info: str = DEFAULT_SOLVER_INFO

    def effective_temperature(self) -> float:
        if self.temperature is not None:
            return self.temperature
        return DEFAULT_TEMPERATURE[self.method]


@dataclass
class RoundRecord:
    index: int
    prompt_text: str
    response_text: str
    program: Optional[str]
    outcomes: List[Outcome]
    outputs: List[Optional[str]]
    training_accuracy: float
    feedback_kind: Optional[str] = None


@dataclass
class RefinementTrace:
    run_index: int
    rounds: List[RoundRecord]
    stop_reason: str  # AllCorrect or RoundsExhausted

    @property
    def final_round(self) -> RoundRecord:
        return self.rounds[-1]

    @property
    def first_round(self) -> RoundRecord:
        return self.rounds[0]


@dataclass
class BestProgram:
    program: Optional[str]
    training_accuracy: float
    run_index: int  # 1-based; 0 when no run produced a program
    tied: bool = False


def _complete(gateway: ChatProvider, request: ChatRequest):
    """One gateway call; transient provider failures become round failures."""
    try:
        return gateway.complete(request), None
    except (CassetteMismatch, CassetteExhausted):
        raise
    except ProviderError as exc:
        return None, str(exc)


def _eval_program(adapter, instances: Sequence[Instance], program: str,
                  config: RunConfig, solver_command: Optional[str]):
    """Run a program over instances, preserving order; optionally in parallel."""
    def one(instance):
        return run_candidate(adapter, instance, program,
                             time_limit=config.time_limit,
                             solver_command=solver_command)

    if config.parallelism > 1 and len(instances) > 1:
        with concurrent.futures.ThreadPoolExecutor(config.parallelism) as pool:
            return list(pool.map(one, instances))
    return [one(inst) for inst in instances]


def refine_once(adapter, gateway: ChatProvider,
                examples: List[Tuple[Instance, GoldSolutionSet]],
                config: RunConfig, run_index: int,
                ledger: Optional[CostLedger] = None,
                solver_command: Optional[str] = None) -> RefinementTrace:
    """One conversation: base prompt, then feedback rounds until done."""
    sample_pairs = [(inst.text, gold.first()) for inst, gold in examples[:config.sample_count]]
    if len(sample_pairs) == 1:
        sample = sample_pairs[0]
    else:
        sample = ("\n\n".join(p[0].rstrip("\n") for p in sample_pairs),
                  "\n\n".join(p[1].rstrip("\n") for p in sample_pairs))
    base = program_prompt(adapter, config.method, sample, solver_info=config.solver_info)
    messages: List[ChatMessage] = [ChatMessage("user", base.text)]
    rounds: List[RoundRecord] = []
    stop_reason = "RoundsExhausted"
    for round_index in range(config.feedback_rounds + 1):
        request = ChatRequest(config.model, tuple(messages),
                              config.effective_temperature())
        response, gateway_error = _complete(gateway, request)
        if response is not None:
            if ledger is not None:
                ledger.add(CallRecord(adapter.problem_id, config.method, "train",
                                      config.model, response.prompt_tokens,
                                      response.completion_tokens))
            messages.append(ChatMessage("assistant", response.text))
            response_text = response.text
            try:
                program = extract_code(response.text, "python")
                failure = None
            except ExtractionError as exc:
                program = None
                failure = "code extraction failed: %s" % exc
        else:
            messages.append(ChatMessage("assistant", ""))
            response_text = ""
            program = None
            failure = "gateway error: %s" % gateway_error

        if program is None:
            outcomes = [Outcome("RuntimeError", failure) for _ in examples]
            outputs: List[Optional[str]] = [None] * len(examples)
        else:
            pairs = _eval_program(adapter, [inst for inst, _ in examples],
                                  program, config, solver_command)
            outcomes = [outcome for _, outcome in pairs]
            outputs = [result.output_text for result, _ in pairs]
        accuracy = sum(1 for o in outcomes if o.kind == "Correct") / len(examples)
        record = RoundRecord(round_index, messages[-2].content, response_text,
                             program, outcomes, outputs, accuracy)
        rounds.append(record)
        if all(o.kind == "Correct" for o in outcomes):
            stop_reason = "AllCorrect"
            break
        if round_index == config.feedback_rounds:
            stop_reason = "RoundsExhausted"
            break
        feedback = _build_feedback(examples, outcomes, outputs, config)
        record.feedback_kind = feedback[0]
        messages.append(ChatMessage("user", feedback[1]))
    return RefinementTrace(run_index, rounds, stop_reason)


def _build_feedback(examples, outcomes, outputs, config: RunConfig) -> Tuple[str, str]:
    """Feedback prompt for the first failing example, in dataset order."""
    for (instance, gold), outcome, output in zip(examples, outcomes, outputs):
        if outcome.kind == "Correct":
            continue
        if outcome.kind == "RuntimeError":
            text = feedback_prompt("runtime", RUNTIME_ERROR=outcome.detail,
                                   INPUT=instance.text).text
            return "Runtime", text
        if outcome.kind == "Timeout":
            text = feedback_prompt("timeout", TIME_LIMIT=str(int(config.time_limit)),
                                   INPUT=instance.text).text
            return "Timeout", text
        produced = output if output is not None else NO_OUTPUT_MARKER
        text = feedback_prompt("wrong_output", INPUT=instance.text,
                               OUTPUT_GENERATED=produced,
                               GOLD_OUTPUT=gold.first()).text
        return "WrongOutput", text
    raise SolveBenchError("feedback requested but every example was correct")


def select_best(traces: List[RefinementTrace], use_first_round: bool = False) -> BestProgram:
    """Highest training accuracy wins; ties go to the lowest run index."""
    best: Optional[BestProgram] = None
    tied = False
    for trace in traces:
        record = trace.first_round if use_first_round else trace.final_round
        if record.program is None:
            continue
        acc = record.training_accuracy
        if best is None or acc > best.training_accuracy:
            best = BestProgram(record.program, acc, trace.run_index)
            tied = False
        elif acc == best.training_accuracy:
            tied = True
    if best is None:
        return BestProgram(None, 0.0, 0)
    best.tied = tied
    return best


@dataclass
class InstanceOutcome:
    index: int
    outcome: Outcome
    wall_time: float


@dataclass
class MethodRun:
    problem: str
    method: str
    traces: List[RefinementTrace] = field(default_factory=list)
    best: Optional[BestProgram] = None
    best_initial: Optional[BestProgram] = None
    test_refined: List[InstanceOutcome] = field(default_factory=list)
    test_initial: List[InstanceOutcome] = field(default_factory=list)
    transcript: List[dict] = field(default_factory=list)
    train_calls: int = 0
    test_calls: int = 0


def _test_with_program(adapter, instances, best: BestProgram,
                       config: RunConfig, solver_command) -> List[InstanceOutcome]:
    if best.program is None:
        return [InstanceOutcome(i, Outcome("RuntimeError", "no extractable program"), 0.0)
                for i in range(len(instances))]
    pairs = _eval_program(adapter, instances, best.program, config, solver_command)
    return [InstanceOutcome(i, outcome, result.wall_time)
            for i, (result, outcome) in enumerate(pairs)]


def run_program_method(adapter, dataset: Dataset, gateway: ChatProvider,
                       config: RunConfig, ledger: CostLedger,
                       solver_command: Optional[str] = None) -> MethodRun:
    """PAL-style or solver-backed program synthesis with refinement."""
    if config.method not in ("pal", "solver_program"):
        raise ConfigError("run_program_method got method %r" % config.method)
    if len(dataset.train) < config.solved_examples:
        raise ConfigError(
            "dataset has %d train instances, need solved_examples=%d"
            % (len(dataset.train), config.solved_examples))
    examples = list(zip(dataset.train, dataset.gold))[:config.solved_examples]
    calls_before = ledger.call_count()
    run = MethodRun(adapter.problem_id, config.method)
    for run_index in range(1, config.runs + 1):
        trace = refine_once(adapter, gateway, examples, config,
                            run_index, ledger, solver_command)
        run.traces.append(trace)
        for record in trace.rounds:
            run.transcript.append({
                "run": trace.run_index,
                "round": record.index,
                "prompt": record.prompt_text,
                "response": record.response_text,
                "program_extracted": record.program is not None,
                "training_accuracy": record.training_accuracy,
                "outcomes": [o.kind for o in record.outcomes],
                "feedback": record.feedback_kind,
                "stop": trace.stop_reason if record is trace.rounds[-1] else None,
            })
    run.train_calls = ledger.call_count() - calls_before
    run.best = select_best(run.traces)
    run.best_initial = select_best(run.traces, use_first_round=True)
    run.test_refined = _test_with_program(adapter, dataset.test, run.best,
                                          config, solver_command)
    if (run.best_initial.program == run.best.program
            and run.best_initial.run_index == run.best.run_index):
        run.test_initial = run.test_refined
    else:
        run.test_initial = _test_with_program(adapter, dataset.test,
                                              run.best_initial, config, solver_command)
    run.test_calls = ledger.call_count() - calls_before - run.train_calls
    return run


def _plain_answer(text: str) -> str:
    """Answer text from a chat response: fence body if fenced, else as-is."""
    try:
        return extract_code(text, "text")
    except ExtractionError:
        return text.strip() + "\n" if text.strip() else ""


def run_fewshot(adapter, dataset: Dataset, gateway: ChatProvider,
                config: RunConfig, ledger: CostLedger) -> MethodRun:
    """Direct per-instance answering with the solved examples in the prompt."""
    examples = list(zip(dataset.train, dataset.gold))[:config.solved_examples]
    sample_pairs = [(inst.text, gold.first()) for inst, gold in examples]
    run = MethodRun(adapter.problem_id, "fewshot")
    calls_before = ledger.call_count()
    for index, instance in enumerate(dataset.test):
        start = time.monotonic()
        prompt = fewshot_prompt(adapter, sample_pairs, instance.text)
        request = ChatRequest(config.model, (ChatMessage("user", prompt.text),),
                              config.effective_temperature())
        response, gateway_error = _complete(gateway, request)
        if response is None:
            outcome = Outcome("WrongOutput", "gateway error: %s" % gateway_error)
        else:
            ledger.add(CallRecord(adapter.problem_id, "fewshot", "test",
                                  config.model, response.prompt_tokens,
                                  response.completion_tokens))
            answer = _plain_answer(response.text)
            verdict = adapter.verify(instance, answer) if answer else None
            if verdict is not None and verdict.kind.name == "CORRECT":
                outcome = Outcome("Correct")
            else:
                reason = verdict.reason if verdict is not None else "empty response"
                outcome = Outcome("WrongOutput", reason)
        wall = time.monotonic() - start
        run.test_refined.append(InstanceOutcome(index, outcome, wall))
        run.transcript.append({
            "index": index,
            "prompt": prompt.text,
            "response": response.text if response is not None else "",
            "outcome": outcome.kind,
        })
    run.test_initial = run.test_refined
    run.test_calls = ledger.call_count() - calls_before
    return run


def run_logiclm(adapter, dataset: Dataset, gateway: ChatProvider,
                config: RunConfig, ledger: CostLedger) -> MethodRun:
    """Per-instance translation to SMT-LIB2, solver check, then formatting."""
    examples = list(zip(dataset.train, dataset.gold))[:config.solved_examples]
    sample = (examples[0][0].text, examples[0][1].first()) if examples else ("", "")
    run = MethodRun(adapter.problem_id, "logiclm")
    calls_before = ledger.call_count()
    for index, instance in enumerate(dataset.test):
        start = time.monotonic()
        final, initial, row = _logiclm_instance(adapter, instance, sample,
                                                gateway, config, ledger)
        wall = time.monotonic() - start
        run.test_refined.append(InstanceOutcome(index, final, wall))
        run.test_initial.append(InstanceOutcome(index, initial, wall))
        row["index"] = index
        run.transcript.append(row)
    run.test_calls = ledger.call_count() - calls_before
    return run


def _logiclm_instance(adapter, instance: Instance, sample, gateway,
                      config: RunConfig,
                      ledger: CostLedger) -> Tuple[Outcome, Outcome, dict]:
    """Returns (final outcome, outcome as if no syntax-feedback rounds ran,
    transcript row)."""
    prompt = logiclm_translate_prompt(adapter, sample, instance.text)
    messages: List[ChatMessage] = [ChatMessage("user", prompt.text)]
    format_exchange: Optional[dict] = None
    verdict = None
    diagnostic = ""
    first_attempt_ok = None
    for round_index in range(config.feedback_rounds + 1):
        request = ChatRequest(config.model, tuple(messages),
                              config.effective_temperature())
        response, gateway_error = _complete(gateway, request)
        if response is None:
            diagnostic = "gateway error: %s" % gateway_error
            messages.append(ChatMessage("assistant", ""))
        else:
            ledger.add(CallRecord(adapter.problem_id, "logiclm", "test",
                                  config.model, response.prompt_tokens,
                                  response.completion_tokens))
            messages.append(ChatMessage("assistant", response.text))
            try:
                script_text = extract_code(response.text, "smt2")
            except ExtractionError as exc:
                script_text = None
                diagnostic = str(exc)
            if script_text is not None:
                result = smt.check(smt.SmtScript(script_text),
                                   time_limit=config.time_limit)
                if result.status is not smt.SolverStatus.SYNTAX_ERROR:
                    verdict = result
                    if first_attempt_ok is None:
                        first_attempt_ok = True
                    break
                diagnostic = result.diagnostic
        if first_attempt_ok is None:
            first_attempt_ok = False
        if round_index < config.feedback_rounds:
            fb = feedback_prompt("runtime", RUNTIME_ERROR=diagnostic,
                                 INPUT=instance.text)
            messages.append(ChatMessage("user", fb.text))
    if verdict is None:
        final = Outcome("Syntactic", diagnostic)
        row = {
            "translation": [{"role": m.role, "content": m.content} for m in messages],
            "format": None,
            "outcome": final.kind,
        }
        return final, final, row
    if verdict.status is smt.SolverStatus.TIMEOUT:
        final = Outcome("Timeout", "solver hit the time limit")
    elif verdict.status is smt.SolverStatus.UNKNOWN:
        final = Outcome("Incorrect", "solver returned unknown")
    else:
        if verdict.status is smt.SolverStatus.UNSAT:
            payload = "unsat\nno satisfying assignment exists for the constraints"
        else:
            payload = verdict.raw_output.strip() or "sat"
        format_prompt = logiclm_format_prompt(adapter, instance.text, payload)
        request = ChatRequest(config.model,
                              (ChatMessage("user", format_prompt.text),),
                              config.effective_temperature())
        response, gateway_error = _complete(gateway, request)
        if response is None:
            final = Outcome("Incorrect", "gateway error: %s" % gateway_error)
            format_exchange = {"prompt": format_prompt.text, "response": ""}
        else:
            ledger.add(CallRecord(adapter.problem_id, "logiclm", "test",
                                  config.model, response.prompt_tokens,
                                  response.completion_tokens))
            format_exchange = {"prompt": format_prompt.text,
                               "response": response.text}
            answer = _plain_answer(response.text)
            verdict2 = adapter.verify(instance, answer) if answer else None
            if verdict2 is not None and verdict2.kind.name == "CORRECT":
                final = Outcome("Correct")
            else:
                reason = verdict2.reason if verdict2 is not None else "empty response"
                final = Outcome("Incorrect", reason)
    # with zero feedback rounds the first failed attempt would have ended it
    initial = final if first_attempt_ok else Outcome("Syntactic", "failed before feedback")
    row = {
        "translation": [{"role": m.role, "content": m.content} for m in messages],
        "format": format_exchange,
        "outcome": final.kind,
    }
    return final, initial, row


def run_method(adapter, dataset: Dataset, gateway: ChatProvider,
               config: RunConfig, ledger: CostLedger,
               solver_command: Optional[str] = None) -> MethodRun:
    if config.method in ("pal", "solver_program"):
        return run_program_method(adapter, dataset, gateway, config, ledger,
                                  solver_command)
    if config.method == "fewshot":
        return run_fewshot(adapter, dataset, gateway, config, ledger)
    if config.method == "logiclm":
        return run_logiclm(adapter, dataset, gateway, config, ledger)
    raise ConfigError("unknown method %r" % config.method)


# --- experiment-level config -------------------------------------------------


@dataclass
class ExperimentConfig:
    methods: List[str] = field(default_factory=lambda: ["solver_program"])
    problems: List[str] = field(default_factory=list)
    model: str = "gpt-4-turbo"
    provider: str = "replay"  # live, replay or scripted
    cassette: Optional[str] = None
    script_file: Optional[str] = None
    record_cassette: Optional[str] = None
    dataset_dir: Optional[str] = None
    runs: int = 5
    feedback_rounds: int = 4
    solved_examples: int = 10
    train_count: Optional[int] = None
    test_count: int = 5
    time_limit: float = 60.0
    parallelism: int = 1
    seed: int = 0
    sample_count: int = 1
    out_dir: str = "reports"
    temperatures: Dict[str, float] = field(default_factory=dict)
    sizes: Dict[Tuple[str, str], SizeDescriptor] = field(default_factory=dict)
    source_text: str = ""

    def run_config(self, method: str) -> RunConfig:
        return RunConfig(
            method=method,
            model=self.model,
            runs=self.runs,
            feedback_rounds=self.feedback_rounds,
            solved_examples=self.solved_examples,
            temperature=self.temperatures.get(method),
            time_limit=self.time_limit,
            parallelism=self.parallelism,
            sample_count=self.sample_count,
        )

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_text().encode("utf-8")).hexdigest()[:12]

    def canonical_text(self) -> str:
        lines = sorted(ln.strip() for ln in self.source_text.splitlines()
                       if ln.strip() and not ln.strip().startswith("#"))
        return "\n".join(lines) + "\n"


_INT_KEYS = {"runs", "feedback_rounds", "solved_examples", "train_count",
             "test_count", "parallelism", "seed", "sample_count"}
_FLOAT_KEYS = {"time_limit"}
_STR_KEYS = {"model", "provider", "cassette", "script_file", "record_cassette",
             "dataset_dir", "out_dir"}


def parse_config(text: str) -> ExperimentConfig:
    """Flat key-value lines; # starts a comment."""
    config = ExperimentConfig(source_text=text)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ConfigError("line %d: expected 'key value'" % lineno)
        key, value = parts[0], parts[1].strip()
        if key in ("method", "methods"):
            methods = [m.strip() for m in value.split(",") if m.strip()]
            bad = [m for m in methods if m not in METHODS]
            if bad:
                raise ConfigError("line %d: unknown method %s" % (lineno, ", ".join(bad)))
            config.methods = methods
        elif key == "problems":
            config.problems = [p.strip() for p in value.split(",") if p.strip()]
        elif key in _INT_KEYS:
            try:
                setattr(config, key, int(value))
            except ValueError:
                raise ConfigError("line %d: %s needs an integer" % (lineno, key)) from None
        elif key in _FLOAT_KEYS:
            try:
                setattr(config, key, float(value))
            except ValueError:
                raise ConfigError("line %d: %s needs a number" % (lineno, key)) from None
        elif key in _STR_KEYS:
            setattr(config, key, value)
        elif key.startswith("temperature."):
            method = key.split(".", 1)[1]
            if method not in METHODS:
                raise ConfigError("line %d: unknown method %r" % (lineno, method))
            try:
                config.temperatures[method] = float(value)
            except ValueError:
                raise ConfigError("line %d: temperature needs a number" % lineno) from None
        elif key.startswith("size."):
            parts = key.split(".")
            if len(parts) != 3 or parts[2] not in ("train", "test"):
                raise ConfigError(
                    "line %d: size keys look like size.<problem>.train" % lineno)
            config.sizes[(parts[1], parts[2])] = SizeDescriptor.decode(value)
        else:
            raise ConfigError("line %d: unknown key %r" % (lineno, key))
    if not config.problems:
        raise ConfigError("config must list at least one problem")
    if config.train_count is None:
        config.train_count = config.solved_examples
    return config


def problem_seed(base_seed: int, problem_id: str) -> int:
    digest = hashlib.sha256(("%d:%s" % (base_seed, problem_id)).encode()).hexdigest()
    return int(digest[:8], 16)


def dataset_for(config: ExperimentConfig, problem_id: str) -> Dataset:
    from .core import get_problem

    if config.dataset_dir:
        return load_dataset(Path(config.dataset_dir) / problem_id)
    adapter = get_problem(problem_id)
    train_size = config.sizes.get((problem_id, "train"), adapter.default_train_size())
    test_size = config.sizes.get((problem_id, "test"), adapter.default_test_size())
    return build_dataset(problem_id, config.train_count, config.test_count,
                         train_size, test_size, problem_seed(config.seed, problem_id))


def load_script(path) -> List[str]:
    """Scripted responses, one JSON object with a text field per line."""
    texts = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
            texts.append(entry["text"])
        except (json.JSONDecodeError, KeyError, TypeError):
            raise ConfigError("%s line %d: expected {\"text\": ...}" % (path, lineno)) from None
    return texts


def build_provider(config: ExperimentConfig) -> CountingProvider:
    if config.provider == "live":
        inner: ChatProvider = HttpChatProvider()
    elif config.provider == "replay":
        if not config.cassette:
            raise ConfigError("provider replay needs a cassette path")
        inner = ReplayProvider(config.cassette)
    elif config.provider == "scripted":
        if not config.script_file:
            raise ConfigError("provider scripted needs a script_file path")
        inner = ScriptedProvider(load_script(config.script_file), model=config.model)
    else:
        raise ConfigError("unknown provider %r" % config.provider)
    if config.record_cassette:
        inner = RecordingProvider(inner, config.record_cassette)
    return CountingProvider(inner)


def _method_rows(dataset: Dataset, run: MethodRun) -> List[InstanceResult]:
    rows = []
    for stage, outcomes in (("initial", run.test_initial),
                            ("refined", run.test_refined)):
        for item in outcomes:
            instance = dataset.test[item.index]
            rows.append(InstanceResult(
                problem=run.problem,
                method=run.method,
                stage=stage,
                index=item.index,
                size=instance.size.encode(),
                outcome=item.outcome.kind,
                detail=item.outcome.detail,
            ))
    return rows


@dataclass
class ExperimentRun:
    config: ExperimentConfig
    report: "object"
    rows: List[InstanceResult]
    method_runs: List[MethodRun]
    ledger: CostLedger
    provider: CountingProvider
    timings: Dict[str, Dict[str, object]]
    out_dir: Optional[Path] = None


def run_experiment(config: ExperimentConfig, write: bool = True,
                   log=None) -> ExperimentRun:
    """Run every configured method on every configured problem."""
    from .core import get_problem

    provider = build_provider(config)
    ledger = CostLedger()
    rows: List[InstanceResult] = []
    method_runs: List[MethodRun] = []
    refinement_meta: Dict[str, Dict[str, object]] = {}
    selection_meta: Dict[str, Dict[str, object]] = {}
    timings: Dict[str, Dict[str, object]] = {}
    needs_solver = any(m in ("solver_program", "logiclm") for m in config.methods)
    solver_command = smt.command_string(config.time_limit) if needs_solver else None
    for problem_id in config.problems:
        adapter = get_problem(problem_id)
        dataset = dataset_for(config, problem_id)
        for method in config.methods:
            if log is not None:
                log("%s / %s" % (problem_id, method))
            run = run_method(adapter, dataset, provider,
                             config.run_config(method), ledger, solver_command)
            method_runs.append(run)
            rows.extend(_method_rows(dataset, run))
            walls = [o.wall_time for o in run.test_refined]
            timings.setdefault(problem_id, {})[method] = {
                "mean_wall_time": sum(walls) / len(walls) if walls else 0.0,
                "per_instance": walls,
            }
            if run.traces:
                refinement_meta.setdefault(problem_id, {})[method] = [
                    {
                        "run": trace.run_index,
                        "accuracies": [r.training_accuracy for r in trace.rounds],
                        "stop": trace.stop_reason,
                    }
                    for trace in run.traces
                ]
                best = run.best
                selection_meta.setdefault(problem_id, {})[method] = {
                    "run": best.run_index,
                    "training_accuracy": best.training_accuracy,
                    "tied": best.tied,
                }
    experiment_report = build_report(config, rows, ledger,
                                     refinement_meta, selection_meta)
    result = ExperimentRun(config, experiment_report, rows, method_runs,
                           ledger, provider, timings)
    if write:
        result.out_dir = write_outputs(result)
    return result


def write_outputs(result: ExperimentRun) -> Path:
    """Report bundle under out_dir/<config digest>-<timestamp>/."""
    config = result.config
    stamp = time.strftime("%Y%m%dT%H%M%S", time.gmtime())
    base = Path(config.out_dir)
    out = base / ("%s-%s" % (config.digest(), stamp))
    suffix = 0
    while out.exists():
        suffix += 1
        out = base / ("%s-%s-%d" % (config.digest(), stamp, suffix))
    (out / "transcripts").mkdir(parents=True)
    (out / "report.json").write_text(emit(result.report, "json"), encoding="utf-8")
    (out / "report.md").write_text(emit(result.report, "markdown"), encoding="utf-8")
    (out / "report.csv").write_text(emit(result.report, "csv"), encoding="utf-8")
    (out / "config.txt").write_text(config.source_text, encoding="utf-8")
    with (out / "results.jsonl").open("w", encoding="utf-8") as fh:
        for row in result.rows:
            fh.write(json.dumps({
                "problem": row.problem, "method": row.method, "stage": row.stage,
                "index": row.index, "size": row.size, "outcome": row.outcome,
                "detail": row.detail,
            }, sort_keys=True) + "\n")
    (out / "timings.json").write_text(
        json.dumps(result.timings, sort_keys=True, indent=2) + "\n",
        encoding="utf-8")
    for run in result.method_runs:
        path = out / "transcripts" / ("%s.%s.jsonl" % (run.problem, run.method))
        with path.open("w", encoding="utf-8") as fh:
            for entry in run.transcript:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")
    return out
