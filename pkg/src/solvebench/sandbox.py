"""Run candidate programs against the input.txt/output.txt file contract.

Each execution gets a fresh scratch directory holding only input.txt. The
whole process tree is terminated at the time limit (SIGTERM, short grace,
then SIGKILL). Classification precedence: killed, then nonzero exit, then
missing output, then the verifier's verdict.
"""

import os
import shlex
import signal
import subprocess
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .core import SolveBenchError
from .problems.base import Verdict, VerdictKind

DEFAULT_TIME_LIMIT = 60.0
KILL_GRACE = 2.0

# classify() only ever produces these four
OUTCOME_KINDS = ("Correct", "WrongOutput", "RuntimeError", "Timeout")
# the logic-translation pipeline scores through the same value type
LOGIC_OUTCOME_KINDS = ("Correct", "Incorrect", "Timeout", "Syntactic")

_ALL_KINDS = frozenset(OUTCOME_KINDS) | frozenset(LOGIC_OUTCOME_KINDS)


class SandboxError(SolveBenchError):
    pass


@dataclass(frozen=True)
class Outcome:
    kind: str
    detail: str = ""

    def __post_init__(self):
        if self.kind not in _ALL_KINDS:
            raise SandboxError("unknown outcome kind %r" % self.kind)


@dataclass
class ExecutionResult:
    exit_code: Optional[int]
    killed: bool
    stdout: str
    stderr: str
    output_text: Optional[str]
    wall_time: float


def _sanitize(text: str, workdir: str) -> str:
    # scratch paths change every run; scrub them so transcripts stay stable
    return text.replace(workdir, "<workdir>")


def execute(program_source: str, input_text: str,
            time_limit: float = DEFAULT_TIME_LIMIT,
            interpreter: str = "python3",
            solver_command: Optional[str] = None) -> ExecutionResult:
    """Run one program on one input inside a scratch directory."""
    with tempfile.TemporaryDirectory(prefix="sandbox-") as workdir:
        prog_path = Path(workdir) / "program.py"
        prog_path.write_text(program_source)
        (Path(workdir) / "input.txt").write_text(input_text)
        env = dict(os.environ)
        env.pop("PYTHONSTARTUP", None)
        if solver_command:
            env["SMT_SOLVER_CMD"] = solver_command
        cmd = shlex.split(interpreter) + [str(prog_path)]
        start = time.monotonic()
        proc = subprocess.Popen(
            cmd,
            cwd=workdir,
            stdin=subprocess.DEVNULL,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            env=env,
            start_new_session=True,
        )
        killed = False
        try:
            out, err = proc.communicate(timeout=time_limit)
        except subprocess.TimeoutExpired:
            killed = True
            _kill_tree(proc)
            out, err = proc.communicate()
        wall = time.monotonic() - start
        output_path = Path(workdir) / "output.txt"
        output_text = None
        if output_path.is_file():
            output_text = output_path.read_text(errors="replace")
        return ExecutionResult(
            exit_code=proc.returncode,
            killed=killed,
            stdout=_sanitize(out.decode("utf-8", errors="replace"), workdir),
            stderr=_sanitize(err.decode("utf-8", errors="replace"), workdir),
            output_text=output_text,
            wall_time=wall,
        )


def _kill_tree(proc: subprocess.Popen):
    try:
        pgid = os.getpgid(proc.pid)
    except ProcessLookupError:
        return
    try:
        os.killpg(pgid, signal.SIGTERM)
    except ProcessLookupError:
        return
    deadline = time.monotonic() + KILL_GRACE
    while time.monotonic() < deadline:
        if proc.poll() is not None:
            break
        time.sleep(0.05)
    try:
        os.killpg(pgid, signal.SIGKILL)
    except ProcessLookupError:
        pass


def classify(result: ExecutionResult, verdict: Optional[Verdict],
             time_limit: float = DEFAULT_TIME_LIMIT) -> Outcome:
    """Map one execution (plus the verifier's verdict, if any) to an outcome."""
    if result.killed:
        return Outcome("Timeout", "exceeded the %.0f second limit" % time_limit)
    if result.exit_code != 0:
        tail = result.stderr.strip().splitlines()
        detail = tail[-1] if tail else "exit code %s" % result.exit_code
        return Outcome("RuntimeError", detail)
    if result.output_text is None:
        return Outcome("WrongOutput", "no output file was written")
    if verdict is None:
        raise SandboxError("verdict required when output is present")
    if verdict.kind is VerdictKind.CORRECT:
        return Outcome("Correct")
    return Outcome("WrongOutput", verdict.reason)


def run_candidate(adapter, instance, program_source: str,
                  time_limit: float = DEFAULT_TIME_LIMIT,
                  interpreter: str = "python3",
                  solver_command: Optional[str] = None):
    """Execute and classify one candidate program on one instance."""
    result = execute(program_source, instance.text, time_limit=time_limit,
                     interpreter=interpreter, solver_command=solver_command)
    verdict = None
    if not result.killed and result.exit_code == 0 and result.output_text is not None:
        verdict = adapter.verify(instance, result.output_text)
    return result, classify(result, verdict, time_limit=time_limit)
