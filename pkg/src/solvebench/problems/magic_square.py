"""Fill an n x n board with 1..n^2 so rows, columns and diagonals share one sum."""

import random
from typing import List, Optional

from ..core import INFEASIBLE, Instance, ParseError, SizeDescriptor
from .base import (
    ProblemAdapter,
    Verdict,
    parse_candidate_grid,
    parse_int_grid,
    serialize_grid,
)

RULES = """We are given a partially filled n x n square board.
- Empty cells are denoted by 0s.
- The completed board must contain each number from 1 to n*n exactly once.
- Numbers already present on the input board cannot be changed.
- Every row, every column, and both main diagonals of the completed board must sum to the same value n*(n*n+1)/2."""

INPUT_FORMAT = """The input has n lines, each with n space-separated integers between 0 and n*n.
A 0 marks an empty cell; any other number is a fixed cell."""

OUTPUT_FORMAT = """The output has n lines, each with n space-separated integers between 1 and n*n:
the completed board."""


def _search(grid: List[List[int]], n: int,
            rng: Optional[random.Random] = None,
            cap: int = 1, collect: Optional[list] = None) -> int:
    target = n * (n * n + 1) // 2
    used = [False] * (n * n + 1)
    for row in grid:
        for v in row:
            if v:
                if used[v]:
                    return 0
                used[v] = True
    cells = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]
    found = 0

    def line_ok(values) -> bool:
        s = sum(values)
        k = sum(1 for v in values if v == 0)
        if k == 0:
            return s == target
        # crude bounds: every number lies in 1..n*n
        return s + k * 1 <= target <= s + k * (n * n)

    def check_after(r: int, c: int) -> bool:
        if not line_ok(grid[r]):
            return False
        if not line_ok([grid[i][c] for i in range(n)]):
            return False
        if r == c and not line_ok([grid[i][i] for i in range(n)]):
            return False
        if r + c == n - 1 and not line_ok([grid[i][n - 1 - i] for i in range(n)]):
            return False
        return True

    def rec(i: int) -> bool:
        nonlocal found
        if i == len(cells):
            found += 1
            if collect is not None:
                collect.append([row[:] for row in grid])
            return found >= cap
        r, c = cells[i]
        values = [v for v in range(1, n * n + 1) if not used[v]]
        if rng is not None:
            rng.shuffle(values)
        for v in values:
            grid[r][c] = v
            used[v] = True
            if check_after(r, c) and rec(i + 1):
                grid[r][c] = 0
                used[v] = False
                return True
            grid[r][c] = 0
            used[v] = False
        return False

    rec(0)
    return found


class MagicSquareAdapter(ProblemAdapter):
    problem_id = "magic-square"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("grid_n",)

    def measure(self, text: str) -> SizeDescriptor:
        return SizeDescriptor(grid_n=len(self.parse(text)))

    def parse(self, text: str):
        grid = parse_int_grid(text, square=True)
        n = len(grid)
        seen = set()
        for r, row in enumerate(grid):
            for v in row:
                if not (0 <= v <= n * n):
                    raise ParseError("cell value %d outside 0..%d" % (v, n * n), line=r + 1)
                if v:
                    if v in seen:
                        raise ParseError("value %d appears twice" % v, line=r + 1)
                    seen.add(v)
        return grid

    def serialize(self, grid) -> str:
        return serialize_grid(grid)

    def default_train_size(self):
        return SizeDescriptor(grid_n=3)

    def default_test_size(self):
        return SizeDescriptor(grid_n=3)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "grid_n")
        n = size["grid_n"]
        grid = [[0] * n for _ in range(n)]
        sols: list = []
        if not _search(grid, n, rng=rng, cap=1, collect=sols):
            from ..core import GenerationError
            raise GenerationError("no full square exists at grid_n=%d" % n)
        full = sols[0]
        masked = [[0 if rng.random() < 0.5 else full[r][c] for c in range(n)]
                  for r in range(n)]
        return self._instance(serialize_grid(masked), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given = self.parse(instance.text)
        n = len(given)
        target = n * (n * n + 1) // 2
        grid = parse_candidate_grid(candidate, n, n)
        if grid is None:
            return Verdict.malformed("expected %d lines of %d integers" % (n, n))
        flat = [v for row in grid for v in row]
        if any(not (1 <= v <= n * n) for v in flat):
            return Verdict.malformed("values must lie in 1..%d" % (n * n))
        for r in range(n):
            for c in range(n):
                if given[r][c] and grid[r][c] != given[r][c]:
                    return Verdict.incorrect("fixed cell (%d,%d) was changed" % (r, c))
        if sorted(flat) != list(range(1, n * n + 1)):
            return Verdict.incorrect("board is not a permutation of 1..%d" % (n * n))
        for r in range(n):
            if sum(grid[r]) != target:
                return Verdict.incorrect("row %d does not sum to %d" % (r, target))
        for c in range(n):
            if sum(grid[r][c] for r in range(n)) != target:
                return Verdict.incorrect("column %d does not sum to %d" % (c, target))
        if sum(grid[i][i] for i in range(n)) != target:
            return Verdict.incorrect("main diagonal does not sum to %d" % target)
        if sum(grid[i][n - 1 - i] for i in range(n)) != target:
            return Verdict.incorrect("anti-diagonal does not sum to %d" % target)
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        grid = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        if not _search(grid, n, cap=1, collect=sols):
            return INFEASIBLE
        return serialize_grid(sols[0])

    def enumerate_solutions(self, instance: Instance, cap: int):
        grid = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        found = _search(grid, n, cap=cap + 1, collect=sols)
        return [serialize_grid(g) for g in sols[:cap]], found <= cap
