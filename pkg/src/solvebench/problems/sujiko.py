"""Place 1..n^2 once each so every 2x2 block matches its given sum."""

import random
from typing import List, Optional

from ..core import INFEASIBLE, Instance, ParseError, SizeDescriptor
from .base import ProblemAdapter, Verdict, serialize_grid
from ..core import strip_trailing_blank_lines

RULES = """We are given an n x n square board together with the required sum of every 2x2 block of adjacent cells.
- The completed board must contain each number from 1 to n*n exactly once.
- Empty cells are denoted by 0s; numbers already present on the input board cannot be changed.
- For every 2x2 block of adjacent cells, the four numbers in the block must add up to the given sum for that block. Blocks are indexed by their top-left cell, so there are (n-1) rows and (n-1) columns of block sums."""

INPUT_FORMAT = """The input has 2n-1 lines. The first n lines each have n space-separated integers
between 0 and n*n giving the board (0 marks an empty cell). The following n-1 lines each
have n-1 space-separated integers: the required sum of every 2x2 block, row by row."""

OUTPUT_FORMAT = """The output has n lines, each with n space-separated integers: the completed board
containing each number from 1 to n*n exactly once and matching every block sum."""


def _parse_lines(text: str):
    lines = [ln for ln in text.split("\n") if ln.strip() != ""]
    if not lines:
        raise ParseError("empty instance")
    n = len(lines[0].split())
    if n < 2:
        raise ParseError("board side must be at least 2", line=1)
    if len(lines) != 2 * n - 1:
        raise ParseError("expected %d lines for a %dx%d board, got %d"
                         % (2 * n - 1, n, n, len(lines)))
    grid = []
    for i in range(n):
        toks = lines[i].split()
        if len(toks) != n:
            raise ParseError("board row needs %d values" % n, line=i + 1)
        try:
            row = [int(t) for t in toks]
        except ValueError:
            raise ParseError("non-integer board value", line=i + 1) from None
        grid.append(row)
    sums = []
    for i in range(n - 1):
        toks = lines[n + i].split()
        if len(toks) != n - 1:
            raise ParseError("block-sum row needs %d values" % (n - 1), line=n + i + 1)
        try:
            row = [int(t) for t in toks]
        except ValueError:
            raise ParseError("non-integer block sum", line=n + i + 1) from None
        sums.append(row)
    return grid, sums


def _search(grid: List[List[int]], sums: List[List[int]], n: int,
            cap: int = 1, collect: Optional[list] = None) -> int:
    used = [False] * (n * n + 1)
    for row in grid:
        for v in row:
            if v:
                if used[v]:
                    return 0
                used[v] = True
    cells = [(r, c) for r in range(n) for c in range(n) if grid[r][c] == 0]
    found = 0

    def blocks_ok(r: int, c: int) -> bool:
        # check every block containing (r,c) whose four cells are all filled;
        # givens can close a block in any fill order
        for br in (r - 1, r):
            for bc in (c - 1, c):
                if 0 <= br < n - 1 and 0 <= bc < n - 1:
                    a = grid[br][bc]
                    b = grid[br][bc + 1]
                    d = grid[br + 1][bc]
                    e = grid[br + 1][bc + 1]
                    if a and b and d and e and a + b + d + e != sums[br][bc]:
                        return False
        return True

    for r in range(n):
        for c in range(n):
            if grid[r][c] and not blocks_ok(r, c):
                return 0

    def rec(i: int) -> bool:
        nonlocal found
        if i == len(cells):
            found += 1
            if collect is not None:
                collect.append([row[:] for row in grid])
            return found >= cap
        r, c = cells[i]
        for v in range(1, n * n + 1):
            if used[v]:
                continue
            grid[r][c] = v
            used[v] = True
            if blocks_ok(r, c) and rec(i + 1):
                grid[r][c] = 0
                used[v] = False
                return True
            grid[r][c] = 0
            used[v] = False
        return False

    rec(0)
    return found


class SujikoAdapter(ProblemAdapter):
    problem_id = "sujiko"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("grid_n",)

    def measure(self, text: str) -> SizeDescriptor:
        grid, _ = self.parse(text)
        return SizeDescriptor(grid_n=len(grid))

    def parse(self, text: str):
        grid, sums = _parse_lines(text)
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
        return grid, sums

    def serialize(self, struct) -> str:
        grid, sums = struct
        return serialize_grid(grid) + serialize_grid(sums)

    def default_train_size(self):
        return SizeDescriptor(grid_n=3)

    def default_test_size(self):
        return SizeDescriptor(grid_n=3)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "grid_n")
        n = size["grid_n"]
        values = list(range(1, n * n + 1))
        rng.shuffle(values)
        full = [values[r * n:(r + 1) * n] for r in range(n)]
        sums = [[full[r][c] + full[r][c + 1] + full[r + 1][c] + full[r + 1][c + 1]
                 for c in range(n - 1)] for r in range(n - 1)]
        masked = [[0 if rng.random() < 0.45 else full[r][c] for c in range(n)]
                  for r in range(n)]
        return self._instance(self.serialize((masked, sums)), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given, sums = self.parse(instance.text)
        n = len(given)
        body = strip_trailing_blank_lines(candidate)
        lines = body.split("\n")
        lines = [ln for ln in lines if ln.strip() != ""]
        if len(lines) != n:
            return Verdict.malformed("expected %d board lines" % n)
        grid = []
        for ln in lines:
            toks = ln.split()
            if len(toks) != n:
                return Verdict.malformed("each line needs %d integers" % n)
            try:
                grid.append([int(t) for t in toks])
            except ValueError:
                return Verdict.malformed("non-integer value in board")
        flat = [v for row in grid for v in row]
        if any(not (1 <= v <= n * n) for v in flat):
            return Verdict.malformed("values must lie in 1..%d" % (n * n))
        for r in range(n):
            for c in range(n):
                if given[r][c] and grid[r][c] != given[r][c]:
                    return Verdict.incorrect("fixed cell (%d,%d) was changed" % (r, c))
        if sorted(flat) != list(range(1, n * n + 1)):
            return Verdict.incorrect("board is not a permutation of 1..%d" % (n * n))
        for r in range(n - 1):
            for c in range(n - 1):
                s = grid[r][c] + grid[r][c + 1] + grid[r + 1][c] + grid[r + 1][c + 1]
                if s != sums[r][c]:
                    return Verdict.incorrect(
                        "block at (%d,%d) sums to %d, needs %d" % (r, c, s, sums[r][c]))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        grid, sums = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        if not _search(grid, sums, n, cap=1, collect=sols):
            return INFEASIBLE
        return serialize_grid(sols[0])

    def enumerate_solutions(self, instance: Instance, cap: int):
        grid, sums = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        found = _search(grid, sums, n, cap=cap + 1, collect=sols)
        return [serialize_grid(g) for g in sols[:cap]], found <= cap
