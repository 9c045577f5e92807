"""Program execution contract: scratch dirs, kills, outcome classification."""

import time

import pytest

from solvebench import get_problem
from solvebench.core import SizeDescriptor
from solvebench.problems.base import Verdict, VerdictKind
from solvebench.sandbox import (
    ExecutionResult,
    Outcome,
    SandboxError,
    classify,
    execute,
    run_candidate,
)

COPY_INPUT = (
    "data = open('input.txt').read()\n"
    "open('output.txt', 'w').write(data)\n"
)


class TestExecute:
    def test_reads_input_writes_output(self):
        result = execute(COPY_INPUT, "1 2 3\n", time_limit=10)
        assert result.exit_code == 0
        assert not result.killed
        assert result.output_text == "1 2 3\n"

    def test_stdout_and_stderr_captured(self):
        prog = "import sys\nprint('to out')\nprint('to err', file=sys.stderr)\n"
        result = execute(prog, "", time_limit=10)
        assert "to out" in result.stdout
        assert "to err" in result.stderr

    def test_scratch_paths_scrubbed(self):
        # tracebacks name the scratch dir; transcripts must not leak it
        result = execute("raise ValueError('boom')", "", time_limit=10)
        assert result.exit_code != 0
        assert "<workdir>" in result.stderr
        assert "/sandbox-" not in result.stderr

    def test_missing_output_is_none(self):
        result = execute("pass", "", time_limit=10)
        assert result.exit_code == 0
        assert result.output_text is None

    def test_program_runs_in_scratch_cwd(self):
        prog = (
            "import os\n"
            "open('output.txt', 'w').write(str(os.path.exists('input.txt')))\n"
        )
        result = execute(prog, "anything", time_limit=10)
        assert result.output_text == "True"

    def test_timeout_kills_process(self):
        start = time.monotonic()
        result = execute("import time\ntime.sleep(30)\n", "", time_limit=1)
        elapsed = time.monotonic() - start
        assert result.killed
        assert elapsed < 10

    def test_sigterm_ignorer_still_dies(self):
        # the grace period ends in SIGKILL, so masking SIGTERM cannot stall us
        prog = (
            "import signal, time\n"
            "signal.signal(signal.SIGTERM, signal.SIG_IGN)\n"
            "time.sleep(30)\n"
        )
        start = time.monotonic()
        result = execute(prog, "", time_limit=1)
        elapsed = time.monotonic() - start
        assert result.killed
        assert elapsed < 10

    def test_timeout_kills_children_too(self):
        prog = (
            "import subprocess, time\n"
            "subprocess.Popen(['sleep', '60'])\n"
            "time.sleep(60)\n"
        )
        start = time.monotonic()
        result = execute(prog, "", time_limit=1)
        assert result.killed
        assert time.monotonic() - start < 10

    def test_solver_command_env(self):
        prog = (
            "import os\n"
            "open('output.txt', 'w').write(os.environ.get('SMT_SOLVER_CMD', 'absent'))\n"
        )
        result = execute(prog, "", time_limit=10, solver_command="fake-z3 -in")
        assert result.output_text == "fake-z3 -in"
        result = execute(prog, "", time_limit=10)
        assert result.output_text == "absent"

    def test_wall_time_recorded(self):
        result = execute("import time\ntime.sleep(0.2)\n", "", time_limit=10)
        assert result.wall_time >= 0.2


def _result(exit_code=0, killed=False, output_text=None, stderr=""):
    return ExecutionResult(exit_code=exit_code, killed=killed, stdout="",
                           stderr=stderr, output_text=output_text,
                           wall_time=0.01)


class TestClassify:
    def test_killed_wins_over_everything(self):
        result = _result(exit_code=1, killed=True, output_text="whatever",
                         stderr="Traceback...")
        outcome = classify(result, None, time_limit=5)
        assert outcome.kind == "Timeout"
        assert "5 second" in outcome.detail

    def test_nonzero_exit_is_runtime_error(self):
        result = _result(exit_code=1, stderr="Traceback\nValueError: boom\n")
        outcome = classify(result, None)
        assert outcome.kind == "RuntimeError"
        assert outcome.detail == "ValueError: boom"

    def test_nonzero_exit_with_output_still_runtime_error(self):
        result = _result(exit_code=2, output_text="1 2\n", stderr="err\n")
        assert classify(result, None).kind == "RuntimeError"

    def test_runtime_error_without_stderr(self):
        outcome = classify(_result(exit_code=3), None)
        assert outcome.kind == "RuntimeError"
        assert "exit code 3" in outcome.detail

    def test_clean_exit_without_output_is_wrong_output(self):
        outcome = classify(_result(exit_code=0), None)
        assert outcome.kind == "WrongOutput"
        assert "no output file" in outcome.detail

    def test_correct_verdict(self):
        result = _result(output_text="1 2\n")
        outcome = classify(result, Verdict(VerdictKind.CORRECT, ""))
        assert outcome == Outcome("Correct")

    def test_incorrect_verdict_reason_propagates(self):
        result = _result(output_text="1 1\n")
        verdict = Verdict(VerdictKind.INCORRECT, "row 0 repeats 1")
        outcome = classify(result, verdict)
        assert outcome.kind == "WrongOutput"
        assert outcome.detail == "row 0 repeats 1"

    def test_malformed_verdict_is_wrong_output(self):
        result = _result(output_text="??\n")
        verdict = Verdict(VerdictKind.MALFORMED, "bad token '??'")
        assert classify(result, verdict).kind == "WrongOutput"

    def test_output_without_verdict_rejected(self):
        with pytest.raises(SandboxError, match="verdict required"):
            classify(_result(output_text="1\n"), None)

    def test_unknown_outcome_kind_rejected(self):
        with pytest.raises(SandboxError, match="unknown outcome kind"):
            Outcome("Exploded")


class TestRunCandidate:
    def setup_method(self):
        self.adapter = get_problem("subset-sum")
        self.instance = self.adapter._instance(
            "3 5 8\n8\n", SizeDescriptor(array_len=3))

    def test_correct_program(self):
        prog = (
            "lines = open('input.txt').read().split('\\n')\n"
            "open('output.txt', 'w').write('8\\n')\n"
        )
        result, outcome = run_candidate(self.adapter, self.instance, prog,
                                        time_limit=10)
        assert outcome.kind == "Correct"
        assert result.exit_code == 0

    def test_wrong_answer_program(self):
        prog = "open('output.txt', 'w').write('3\\n')\n"
        _, outcome = run_candidate(self.adapter, self.instance, prog,
                                   time_limit=10)
        assert outcome.kind == "WrongOutput"
        assert outcome.detail

    def test_crashing_program(self):
        _, outcome = run_candidate(self.adapter, self.instance,
                                   "1 / 0\n", time_limit=10)
        assert outcome.kind == "RuntimeError"
        assert "ZeroDivisionError" in outcome.detail

    def test_hanging_program(self):
        _, outcome = run_candidate(self.adapter, self.instance,
                                   "while True:\n    pass\n", time_limit=1)
        assert outcome.kind == "Timeout"
