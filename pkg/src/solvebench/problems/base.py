"""Adapter surface shared by all benchmark problems.

Verifiers judge candidate text only: trailing blank lines are tolerated,
anything else malformed is Malformed, a well-formed wrong answer is Incorrect.
Reference solvers and enumerators are plain backtracking search; they never
touch the SMT gateway, so they can act as an independent oracle for it.
"""

import enum
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..core import (
    Instance,
    ParseError,
    SizeDescriptor,
    SizeError,
    canonical_text,
    strip_trailing_blank_lines,
)


class VerdictKind(enum.Enum):
    CORRECT = "Correct"
    INCORRECT = "Incorrect"
    MALFORMED = "Malformed"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: str = ""

    @classmethod
    def correct(cls):
        return cls(VerdictKind.CORRECT)

    @classmethod
    def incorrect(cls, reason: str):
        return cls(VerdictKind.INCORRECT, reason)

    @classmethod
    def malformed(cls, reason: str):
        return cls(VerdictKind.MALFORMED, reason)


class ProblemAdapter:
    """One benchmark problem: text formats, generator, verifier, oracle."""

    problem_id: str = ""
    rules: str = ""
    input_format: str = ""
    output_format: str = ""
    size_dimensions: Tuple[str, ...] = ()

    # -- parsing ---------------------------------------------------------

    def parse(self, text: str):
        raise NotImplementedError

    def serialize(self, struct) -> str:
        raise NotImplementedError

    # -- generation ------------------------------------------------------

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        raise NotImplementedError

    def default_train_size(self) -> SizeDescriptor:
        raise NotImplementedError

    def default_test_size(self) -> SizeDescriptor:
        raise NotImplementedError

    # -- judging ---------------------------------------------------------

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        raise NotImplementedError

    def solve(self, instance: Instance) -> str:
        """Reference solution text, or INFEASIBLE for unsatisfiable instances."""
        raise NotImplementedError

    def enumerate_solutions(self, instance: Instance, cap: int) -> Tuple[List[str], bool]:
        """Up to cap solution texts plus a flag: True when the list is complete."""
        raise NotImplementedError

    # -- shared helpers ----------------------------------------------------

    def measure(self, text: str) -> SizeDescriptor:
        """Size dimensions read off a raw instance text."""
        raise NotImplementedError

    def _instance(self, text: str, size: SizeDescriptor, seed=None) -> Instance:
        return Instance(self.problem_id, canonical_text(text), size, seed=seed)

    def sample_pair(self) -> Tuple[str, str]:
        """Deterministic (input, output) pair used in prompts."""
        inst = self.generate(self.default_train_size(), random.Random(0xBEEF))
        sols, _ = self.enumerate_solutions(inst, cap=2)
        return inst.text, sols[0]

    def require_dims(self, size: SizeDescriptor, *names: str):
        for name in names:
            if size.get(name) is None:
                raise SizeError(
                    "%s: size needs dimension %r (got %s)"
                    % (self.problem_id, name, size.encode())
                )


def parse_int_grid(text: str, square: bool = True) -> List[List[int]]:
    """Parse lines of space-separated ints; all rows must share one width."""
    lines = [ln for ln in text.split("\n")]
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty grid")
    rows = []
    width = None
    for lineno, ln in enumerate(lines, start=1):
        toks = ln.split()
        if not toks:
            raise ParseError("blank line inside grid", line=lineno)
        try:
            row = [int(t) for t in toks]
        except ValueError:
            raise ParseError("non-integer token in grid", line=lineno) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError("ragged row (expected %d values)" % width, line=lineno)
        rows.append(row)
    if square and len(rows) != width:
        raise ParseError("grid must be square, got %dx%d" % (len(rows), width))
    return rows


def serialize_grid(rows: List[List[int]]) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in rows) + "\n"


def parse_candidate_grid(candidate: str, n_rows: int, n_cols: int) -> Optional[List[List[int]]]:
    """Grid from candidate text, or None (caller reports Malformed)."""
    try:
        rows = parse_int_grid(strip_trailing_blank_lines(candidate), square=False)
    except ParseError:
        return None
    if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
        return None
    return rows


def parse_edge_list(text: str, header_fields: int):
    """Graph header plus edge lines.

    Returns (header tuple, edges as sorted-unique (u, v) with u < v).
    Duplicate edges, self loops and out-of-range endpoints are parse errors.
    """
    lines = [ln for ln in text.split("\n")]
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty graph")
    head = lines[0].split()
    if len(head) != header_fields:
        raise ParseError("header must have %d fields" % header_fields, line=1)
    try:
        header = tuple(int(t) for t in head)
    except ValueError:
        raise ParseError("non-integer header field", line=1) from None
    n = header[0]
    if n < 1:
        raise ParseError("vertex count must be positive", line=1)
    edges = []
    seen = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError("edge line must have two endpoints", line=lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError("non-integer endpoint", line=lineno) from None
        if u == v:
            raise ParseError("self loop %d-%d" % (u, v), line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("endpoint out of range 0..%d" % (n - 1), line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError("duplicate edge %d-%d" % key, line=lineno)
        seen.add(key)
        edges.append(key)
    return header, sorted(edges)


def serialize_edge_list(header, edges) -> str:
    lines = [" ".join(str(v) for v in header)]
    lines.extend("%d %d" % e for e in edges)
    return "\n".join(lines) + "\n"


def parse_yes_no(candidate: str) -> Optional[str]:
    """Strict single-token YES/NO answer, or None if anything else."""
    body = strip_trailing_blank_lines(candidate)
    token = body.strip()
    if token in ("YES", "NO") and body == token + "\n":
        return token
    return None


def random_connected_pairs(n: int, count: int, rng: random.Random, forbid=()):
    """count distinct non-loop undirected pairs over range(n), or None."""
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in forbid]
    if count > len(all_pairs):
        return None
    rng.shuffle(all_pairs)
    return sorted(all_pairs[:count])
