"""Gateway to an external SMT-LIB2 solver process.

The solver binary is configuration, not code: any command that reads SMT-LIB2
on stdin and prints sat/unsat plus an optional model works. Discovery order:
the SMT_SOLVER_CMD environment variable, a native z3 on PATH, then the bundled
node shim over the z3 WASM build.
"""

import enum
import math
import os
import re
import shlex
import shutil
import signal
import subprocess
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .core import SolveBenchError

DEFAULT_TIME_LIMIT = 60.0


class SolverUnavailable(SolveBenchError):
    pass


class ModelParseError(SolveBenchError):
    def __init__(self, message: str, offset: int):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


class SolverStatus(enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    UNKNOWN = "unknown"
    TIMEOUT = "timeout"
    SYNTAX_ERROR = "syntax_error"


@dataclass(frozen=True)
class SmtScript:
    text: str
    expects_model: bool = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.expects_model is None:
            object.__setattr__(self, "expects_model", "(get-model)" in self.text)


@dataclass
class SolverVerdict:
    status: SolverStatus
    model: Dict[str, Tuple[str, Union[int, bool]]] = field(default_factory=dict)
    raw_output: str = ""
    diagnostic: str = ""


def balanced_parens(text: str) -> bool:
    """Paren balance outside string literals and ; comments."""
    depth = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif ch == '"':
            i += 1
            while i < n:
                if text[i] == '"':
                    if i + 1 < n and text[i + 1] == '"':  # escaped quote
                        i += 2
                        continue
                    break
                i += 1
        elif ch == "|":
            i += 1
            while i < n and text[i] != "|":
                i += 1
        elif ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
        i += 1
    return depth == 0


def packaged_shim_path() -> Path:
    return Path(__file__).resolve().parent / "data" / "z3cli.js"


def default_command(time_limit: float = DEFAULT_TIME_LIMIT) -> List[str]:
    """Solver argv with the time limit baked in."""
    limit = max(1, math.ceil(time_limit))
    override = os.environ.get("SMT_SOLVER_CMD")
    if override:
        parts = shlex.split(override)
        return [p.replace("{limit}", str(limit)) for p in parts]
    z3 = shutil.which("z3")
    if z3:
        return [z3, "-in", "-T:%d" % limit]
    node = shutil.which("node")
    shim = packaged_shim_path()
    if node and shim.is_file():
        return [node, str(shim), "-T:%d" % limit]
    raise SolverUnavailable(
        "no SMT solver found: set SMT_SOLVER_CMD, put z3 on PATH, or install "
        "node and run npm install next to this package")


def command_string(time_limit: float = DEFAULT_TIME_LIMIT) -> str:
    """Shell-quoted solver command, suitable for the SMT_SOLVER_CMD env var."""
    return shlex.join(default_command(time_limit))


_ERROR_RE = re.compile(r'^\(error\s+"(.*)"\s*\)\s*$')


def check(script: SmtScript, time_limit: float = DEFAULT_TIME_LIMIT,
          command: Optional[List[str]] = None) -> SolverVerdict:
    """Run the script through the solver and digest its output."""
    if not balanced_parens(script.text):
        return SolverVerdict(SolverStatus.SYNTAX_ERROR,
                             diagnostic="unbalanced parentheses in script")
    cmd = command or default_command(time_limit)
    proc = subprocess.Popen(
        cmd,
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        start_new_session=True,
    )
    try:
        out_b, err_b = proc.communicate(script.text.encode("utf-8"),
                                        timeout=time_limit + 10.0)
    except subprocess.TimeoutExpired:
        try:
            os.killpg(os.getpgid(proc.pid), signal.SIGKILL)
        except ProcessLookupError:
            pass
        proc.communicate()
        return SolverVerdict(SolverStatus.TIMEOUT,
                             diagnostic="solver killed at the external limit")
    out = out_b.decode("utf-8", errors="replace")
    err = err_b.decode("utf-8", errors="replace")
    return digest_output(out, err, script)


def digest_output(out: str, err: str, script: SmtScript) -> SolverVerdict:
    status: Optional[SolverStatus] = None
    errors: List[str] = []
    status_line_end = 0
    pos = 0
    for line in out.splitlines(keepends=True):
        stripped = line.strip()
        pos += len(line)
        if status is None:
            m = _ERROR_RE.match(stripped)
            if m:
                errors.append(m.group(1))
                continue
            if stripped == "sat":
                status = SolverStatus.SAT
                status_line_end = pos
            elif stripped == "unsat":
                status = SolverStatus.UNSAT
                status_line_end = pos
            elif stripped == "unknown":
                status = SolverStatus.UNKNOWN
                status_line_end = pos
            elif stripped == "timeout":
                status = SolverStatus.TIMEOUT
                status_line_end = pos
    if status is None:
        diagnostic = errors[0] if errors else (err.strip() or "solver produced no verdict")
        return SolverVerdict(SolverStatus.SYNTAX_ERROR, raw_output=out,
                             diagnostic=diagnostic)
    if errors:
        # errors before the verdict mean the script itself was rejected
        return SolverVerdict(SolverStatus.SYNTAX_ERROR, raw_output=out,
                             diagnostic=errors[0])
    verdict = SolverVerdict(status, raw_output=out)
    if status is SolverStatus.SAT and script.expects_model:
        verdict.model = parse_model(out[status_line_end:])
    return verdict


_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if not m:
            i += 1
            continue
        if m.start() != i and not text[i].isspace():
            i += 1
            continue
        if text[i].isspace():
            i += 1
            continue
        tokens.append((m.group(0), m.start()))
        i = m.end()
    return tokens


def _read_sexprs(tokens: List[Tuple[str, int]], text: str):
    forms = []
    stack: List[list] = []
    for tok, off in tokens:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if not stack:
                raise ModelParseError("unmatched closing paren in model", off)
            done = stack.pop()
            if stack:
                stack[-1].append(done)
            else:
                forms.append(done)
        else:
            if stack:
                stack[-1].append(tok)
            else:
                forms.append(tok)
    if stack:
        raise ModelParseError("unterminated model expression", len(text) - 1)
    return forms


def parse_model(text: str) -> Dict[str, Tuple[str, Union[int, bool]]]:
    """Zero-arity Int/Bool define-funs from a (get-model) block."""
    tokens = _tokenize(text)
    forms = _read_sexprs(tokens, text)
    model: Dict[str, Tuple[str, Union[int, bool]]] = {}

    def walk(form):
        if not isinstance(form, list):
            return
        if form and form[0] == "define-fun":
            if len(form) != 5:
                return
            _, name, args, sort, value = form
            if args != [] or sort not in ("Int", "Bool"):
                return
            if not isinstance(name, str):
                return
            model[name] = (sort, _decode_value(sort, value))
            return
        for item in form:
            walk(item)

    for form in forms:
        walk(form)
    if not model and "define-fun" in text:
        raise ModelParseError("model block present but no assignment parsed", 0)
    return model


def _decode_value(sort: str, value) -> Union[int, bool]:
    if sort == "Bool":
        if value == "true":
            return True
        if value == "false":
            return False
        raise ModelParseError("bad Bool literal %r" % (value,), 0)
    if isinstance(value, list):
        if len(value) == 2 and value[0] == "-":
            return -_decode_value("Int", value[1])
        raise ModelParseError("bad Int expression %r" % (value,), 0)
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ModelParseError("bad Int literal %r" % (value,), 0) from None
