"""Binary-style grid with two symbols, balance, run and uniqueness rules."""

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

RULES = """We are given a partially filled n x n square board, where n is even. Cells hold the symbols 1 and 2.
- Empty cells are denoted by 0s and have to be filled with either 1 or 2.
- Symbols already present on the input board cannot be changed.
- Every row and every column of the completed board must contain exactly n/2 ones and n/2 twos.
- No row or column may contain three consecutive equal symbols.
- No two rows of the completed board may be identical.
- No two columns of the completed board may be identical."""

INPUT_FORMAT = """The input has n lines, each with n space-separated integers from {0, 1, 2}.
A 0 marks an empty cell."""

OUTPUT_FORMAT = """The output has n lines, each with n space-separated integers from {1, 2}:
the completed board."""


def _search(grid: List[List[int]], n: int,
            rng: Optional[random.Random] = None,
            cap: int = 1, collect: Optional[list] = None) -> int:
    half = n // 2
    row_cnt = [[0, 0] for _ in range(n)]
    col_cnt = [[0, 0] for _ in range(n)]
    for r in range(n):
        for c in range(n):
            v = grid[r][c]
            if v:
                row_cnt[r][v - 1] += 1
                col_cnt[c][v - 1] += 1
    cells = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]
    found = 0

    def place_ok(r: int, c: int) -> bool:
        v = grid[r][c]
        if row_cnt[r][v - 1] > half or col_cnt[c][v - 1] > half:
            return False
        # runs of three through (r,c), in both directions
        row = grid[r]
        for s in range(max(0, c - 2), min(c, n - 3) + 1):
            if row[s] and row[s] == row[s + 1] == row[s + 2]:
                return False
        for s in range(max(0, r - 2), min(r, n - 3) + 1):
            if grid[s][c] and grid[s][c] == grid[s + 1][c] == grid[s + 2][c]:
                return False
        if 0 not in row:
            for rr in range(n):
                if rr != r and 0 not in grid[rr] and grid[rr] == row:
                    return False
        col = [grid[i][c] for i in range(n)]
        if 0 not in col:
            for cc in range(n):
                if cc != c:
                    other = [grid[i][cc] for i in range(n)]
                    if 0 not in other and other == col:
                        return False
        return True

    for r in range(n):
        for c in range(n):
            if grid[r][c]:
                if row_cnt[r][grid[r][c] - 1] > half:
                    return 0
                if not place_ok(r, c):
                    return 0

    def rec(i: int) -> bool:
        nonlocal found
        if i == len(cells):
            found += 1
            if collect is not None:
                collect.append([row[:] for row in grid])
            return found >= cap
        r, c = cells[i]
        symbols = [1, 2]
        if rng is not None:
            rng.shuffle(symbols)
        for v in symbols:
            grid[r][c] = v
            row_cnt[r][v - 1] += 1
            col_cnt[c][v - 1] += 1
            if place_ok(r, c) and rec(i + 1):
                grid[r][c] = 0
                row_cnt[r][v - 1] -= 1
                col_cnt[c][v - 1] -= 1
                return True
            grid[r][c] = 0
            row_cnt[r][v - 1] -= 1
            col_cnt[c][v - 1] -= 1
        return False

    rec(0)
    return found


class BinairoAdapter(ProblemAdapter):
    problem_id = "binairo"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("grid_n",)

    def measure(self, text: str) -> SizeDescriptor:
        return SizeDescriptor(grid_n=len(self.parse(text)))

    def parse(self, text: str):
        grid = parse_int_grid(text, square=True)
        n = len(grid)
        if n % 2 != 0:
            raise ParseError("board side %d must be even" % n)
        for r, row in enumerate(grid):
            for v in row:
                if v not in (0, 1, 2):
                    raise ParseError("cell value %d outside {0,1,2}" % v, line=r + 1)
        return grid

    def serialize(self, grid) -> str:
        return serialize_grid(grid)

    def default_train_size(self):
        return SizeDescriptor(grid_n=4)

    def default_test_size(self):
        return SizeDescriptor(grid_n=6)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "grid_n")
        n = size["grid_n"]
        if n % 2 != 0:
            from ..core import SizeError
            raise SizeError("binairo size grid_n=%d must be even" % n)
        grid = [[0] * n for _ in range(n)]
        sols: list = []
        _search(grid, n, rng=rng, cap=1, collect=sols)
        full = sols[0]
        masked = [[0 if rng.random() < 0.55 else full[r][c] for c in range(n)]
                  for r in range(n)]
        return self._instance(serialize_grid(masked), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given = self.parse(instance.text)
        n = len(given)
        half = n // 2
        grid = parse_candidate_grid(candidate, n, n)
        if grid is None:
            return Verdict.malformed("expected %d lines of %d integers" % (n, n))
        for row in grid:
            for v in row:
                if v not in (1, 2):
                    return Verdict.malformed("value %d outside {1,2}" % v)
        for r in range(n):
            for c in range(n):
                if given[r][c] and grid[r][c] != given[r][c]:
                    return Verdict.incorrect("fixed cell (%d,%d) was changed" % (r, c))
        for r in range(n):
            if grid[r].count(1) != half:
                return Verdict.incorrect("row %d needs exactly %d ones" % (r, half))
        for c in range(n):
            if sum(1 for r in range(n) if grid[r][c] == 1) != half:
                return Verdict.incorrect("column %d needs exactly %d ones" % (c, half))
        for r in range(n):
            for c in range(n - 2):
                if grid[r][c] == grid[r][c + 1] == grid[r][c + 2]:
                    return Verdict.incorrect("row %d has three consecutive equal symbols" % r)
        for c in range(n):
            for r in range(n - 2):
                if grid[r][c] == grid[r + 1][c] == grid[r + 2][c]:
                    return Verdict.incorrect("column %d has three consecutive equal symbols" % c)
        for a in range(n):
            for b in range(a + 1, n):
                if grid[a] == grid[b]:
                    return Verdict.incorrect("rows %d and %d are identical" % (a, b))
        for a in range(n):
            for b in range(a + 1, n):
                if all(grid[r][a] == grid[r][b] for r in range(n)):
                    return Verdict.incorrect("columns %d and %d are identical" % (a, b))
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
