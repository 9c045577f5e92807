"""Place n mutually non-attacking pieces on an n x n board, honouring givens."""

import random
from typing import List, Optional

from ..core import (
    GenerationError,
    INFEASIBLE,
    Instance,
    ParseError,
    SizeDescriptor,
)
from .base import (
    ProblemAdapter,
    Verdict,
    parse_candidate_grid,
    parse_int_grid,
    serialize_grid,
)

RULES = """We are given an n x n square board on which n pieces have to be placed.
- A cell holding a piece is denoted by 1 and an empty cell by 0.
- Pieces already present on the input board cannot be moved or removed.
- The completed board must hold exactly n pieces.
- No two pieces may share a row, share a column, or share a diagonal."""

INPUT_FORMAT = """The input has n lines, each with n space-separated integers from {0, 1}.
A 1 marks a cell that already holds a piece."""

OUTPUT_FORMAT = """The output has n lines, each with n space-separated integers from {0, 1}:
the completed board with exactly n pieces, including every piece given in the input."""


def _search(n: int, fixed_cols: List[Optional[int]],
            rng: Optional[random.Random] = None,
            cap: int = 1, collect: Optional[list] = None) -> int:
    """Row-by-row placement; fixed_cols pins a column for some rows."""
    found = 0
    cols = [False] * n
    diag1 = [False] * (2 * n)
    diag2 = [False] * (2 * n)
    placement = [0] * n

    def rec(r: int) -> bool:
        nonlocal found
        if r == n:
            found += 1
            if collect is not None:
                collect.append(placement[:])
            return found >= cap
        options = [fixed_cols[r]] if fixed_cols[r] is not None else list(range(n))
        if rng is not None and fixed_cols[r] is None:
            rng.shuffle(options)
        for c in options:
            if cols[c] or diag1[r + c] or diag2[r - c + n]:
                continue
            cols[c] = diag1[r + c] = diag2[r - c + n] = True
            placement[r] = c
            stop = rec(r + 1)
            cols[c] = diag1[r + c] = diag2[r - c + n] = False
            if stop:
                return True
        return False

    rec(0)
    return found


def _fixed_cols_from_grid(grid: List[List[int]], n: int) -> Optional[List[Optional[int]]]:
    """One pinned column per row, or None when givens already conflict."""
    fixed: List[Optional[int]] = [None] * n
    for r in range(n):
        for c in range(n):
            if grid[r][c]:
                if fixed[r] is not None:
                    return None
                fixed[r] = c
    return fixed


def _grid_from_placement(placement: List[int], n: int) -> List[List[int]]:
    return [[1 if placement[r] == c else 0 for c in range(n)] for r in range(n)]


class NQueensAdapter(ProblemAdapter):
    problem_id = "n-queens"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("grid_n",)

    def measure(self, text: str) -> SizeDescriptor:
        return SizeDescriptor(grid_n=len(self.parse(text)))

    def parse(self, text: str):
        grid = parse_int_grid(text, square=True)
        for r, row in enumerate(grid):
            for v in row:
                if v not in (0, 1):
                    raise ParseError("cell value %d outside {0,1}" % v, line=r + 1)
        return grid

    def serialize(self, grid) -> str:
        return serialize_grid(grid)

    def default_train_size(self):
        return SizeDescriptor(grid_n=5)

    def default_test_size(self):
        return SizeDescriptor(grid_n=6)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "grid_n")
        n = size["grid_n"]
        if n in (2, 3):
            raise GenerationError("no feasible boards exist at grid_n=%d" % n)
        sols: list = []
        _search(n, [None] * n, rng=rng, cap=1, collect=sols)
        placement = sols[0]
        # keep a few pieces as givens; dropping pieces keeps the board feasible
        grid = [[0] * n for _ in range(n)]
        for r in range(n):
            if rng.random() < 0.35:
                grid[r][placement[r]] = 1
        return self._instance(serialize_grid(grid), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given = self.parse(instance.text)
        n = len(given)
        grid = parse_candidate_grid(candidate, n, n)
        if grid is None:
            return Verdict.malformed("expected %d lines of %d integers" % (n, n))
        for row in grid:
            for v in row:
                if v not in (0, 1):
                    return Verdict.malformed("value %d outside {0,1}" % v)
        for r in range(n):
            for c in range(n):
                if given[r][c] and not grid[r][c]:
                    return Verdict.incorrect("piece at (%d,%d) was removed" % (r, c))
        pieces = [(r, c) for r in range(n) for c in range(n) if grid[r][c]]
        if len(pieces) != n:
            return Verdict.incorrect("board holds %d pieces, needs %d" % (len(pieces), n))
        for i in range(len(pieces)):
            for j in range(i + 1, len(pieces)):
                r1, c1 = pieces[i]
                r2, c2 = pieces[j]
                if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2):
                    return Verdict.incorrect(
                        "pieces at (%d,%d) and (%d,%d) attack each other" % (r1, c1, r2, c2))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        grid = self.parse(instance.text)
        n = len(grid)
        fixed = _fixed_cols_from_grid(grid, n)
        if fixed is None:
            return INFEASIBLE
        sols: list = []
        if not _search(n, fixed, cap=1, collect=sols):
            return INFEASIBLE
        return serialize_grid(_grid_from_placement(sols[0], n))

    def enumerate_solutions(self, instance: Instance, cap: int):
        grid = self.parse(instance.text)
        n = len(grid)
        fixed = _fixed_cols_from_grid(grid, n)
        if fixed is None:
            return [], True
        sols: list = []
        found = _search(n, fixed, cap=cap + 1, collect=sols)
        return [serialize_grid(_grid_from_placement(p, n)) for p in sols[:cap]], found <= cap
