"""Row/column permutation puzzle: fill an n x n board with 1..n."""

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
- Empty cells are denoted by 0s and have to be filled with numbers from 1 to n.
- Numbers already present on the input board cannot be changed.
- Every row of the completed board must contain each number from 1 to n exactly once.
- Every column of the completed board must contain each number from 1 to n exactly once."""

INPUT_FORMAT = """The input has n lines, each with n space-separated integers between 0 and n.
A 0 marks an empty cell; any other number is a fixed cell."""

OUTPUT_FORMAT = """The output has n lines, each with n space-separated integers between 1 and n:
the completed board."""


def fill_square(grid: List[List[int]], n: int,
                rng: Optional[random.Random] = None,
                cap: int = 1, collect: Optional[list] = None) -> int:
    """Backtracking fill honouring row/column uniqueness; returns hit count."""
    rows = [0] * n
    cols = [0] * n
    empties = []
    for r in range(n):
        for c in range(n):
            v = grid[r][c]
            if v:
                bit = 1 << (v - 1)
                if rows[r] & bit or cols[c] & bit:
                    return 0
                rows[r] |= bit
                cols[c] |= bit
            else:
                empties.append((r, c))
    found = 0

    def rec(i: int) -> bool:
        nonlocal found
        if i == len(empties):
            found += 1
            if collect is not None:
                collect.append([row[:] for row in grid])
            return found >= cap
        r, c = empties[i]
        opts = [v for v in range(1, n + 1)
                if not ((rows[r] | cols[c]) >> (v - 1) & 1)]
        if rng is not None:
            rng.shuffle(opts)
        for v in opts:
            bit = 1 << (v - 1)
            rows[r] |= bit; cols[c] |= bit
            grid[r][c] = v
            stop = rec(i + 1)
            rows[r] &= ~bit; cols[c] &= ~bit
            grid[r][c] = 0
            if stop:
                return True
        return False

    rec(0)
    return found


class LatinSquareAdapter(ProblemAdapter):
    problem_id = "latin-square"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("grid_n",)

    def measure(self, text: str) -> SizeDescriptor:
        return SizeDescriptor(grid_n=len(self.parse(text)))

    def parse(self, text: str):
        grid = parse_int_grid(text, square=True)
        n = len(grid)
        for r, row in enumerate(grid):
            for v in row:
                if not (0 <= v <= n):
                    raise ParseError("cell value %d outside 0..%d" % (v, n), line=r + 1)
        return grid

    def serialize(self, grid) -> str:
        return serialize_grid(grid)

    def default_train_size(self):
        return SizeDescriptor(grid_n=4)

    def default_test_size(self):
        return SizeDescriptor(grid_n=5)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "grid_n")
        n = size["grid_n"]
        grid = [[0] * n for _ in range(n)]
        fill_square(grid, n, rng=rng, cap=1, collect=(sols := []))
        full = sols[0]
        masked = [[0 if rng.random() < 0.55 else full[r][c] for c in range(n)]
                  for r in range(n)]
        return self._instance(serialize_grid(masked), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given = self.parse(instance.text)
        n = len(given)
        grid = parse_candidate_grid(candidate, n, n)
        if grid is None:
            return Verdict.malformed("expected %d lines of %d integers" % (n, n))
        for row in grid:
            for v in row:
                if not (1 <= v <= n):
                    return Verdict.malformed("value %d outside 1..%d" % (v, n))
        for r in range(n):
            for c in range(n):
                if given[r][c] and grid[r][c] != given[r][c]:
                    return Verdict.incorrect("fixed cell (%d,%d) was changed" % (r, c))
        want = set(range(1, n + 1))
        for r in range(n):
            if set(grid[r]) != want:
                return Verdict.incorrect("row %d is not a permutation of 1..%d" % (r, n))
        for c in range(n):
            if set(grid[r][c] for r in range(n)) != want:
                return Verdict.incorrect("column %d is not a permutation of 1..%d" % (c, n))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        grid = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        if not fill_square(grid, n, cap=1, collect=sols):
            return INFEASIBLE
        return serialize_grid(sols[0])

    def enumerate_solutions(self, instance: Instance, cap: int):
        grid = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        found = fill_square(grid, n, cap=cap + 1, collect=sols)
        return [serialize_grid(g) for g in sols[:cap]], found <= cap
