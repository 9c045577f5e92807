"""Number-placement puzzle on an n x n board with sqrt(n) subgrids."""

import math
import random
from typing import List, Optional, Tuple

from ..core import Instance, ParseError, SizeDescriptor, SizeError
from .base import (
    ProblemAdapter,
    Verdict,
    parse_candidate_grid,
    parse_int_grid,
    serialize_grid,
)

RULES = """We are given a partially filled n x n square board, where n is a perfect square.
- Empty cells are denoted by 0s and have to be filled with numbers from 1 to n.
- Numbers already present on the input board cannot be changed.
- Every row of the completed board must contain each number from 1 to n exactly once.
- Every column of the completed board must contain each number from 1 to n exactly once.
- The board is divided into sqrt(n) x sqrt(n) non-overlapping subgrids; every subgrid of the completed board must contain each number from 1 to n exactly once."""

INPUT_FORMAT = """The input has n lines, each with n space-separated integers between 0 and n.
A 0 marks an empty cell; any other number is a fixed cell."""

OUTPUT_FORMAT = """The output has n lines, each with n space-separated integers between 1 and n:
the completed board."""


def _box_of(r: int, c: int, b: int) -> int:
    return (r // b) * b + (c // b)


def _solve_grid(grid: List[List[int]], n: int, b: int,
                rng: Optional[random.Random] = None,
                cap: int = 1, collect: Optional[list] = None) -> int:
    """Count completions up to cap; mutates grid during search, restores after.

    With rng the value order is shuffled (used for generation variety).
    Found solutions are appended to collect as copied grids when given.
    """
    full = (1 << n) - 1
    rows = [0] * n
    cols = [0] * n
    boxes = [0] * n
    empties = []
    for r in range(n):
        for c in range(n):
            v = grid[r][c]
            if v:
                bit = 1 << (v - 1)
                bx = _box_of(r, c, b)
                if rows[r] & bit or cols[c] & bit or boxes[bx] & bit:
                    return 0
                rows[r] |= bit
                cols[c] |= bit
                boxes[bx] |= bit
            else:
                empties.append((r, c))
    found = 0

    def rec(remaining: List[Tuple[int, int]]) -> bool:
        nonlocal found
        if not remaining:
            found += 1
            if collect is not None:
                collect.append([row[:] for row in grid])
            return found >= cap
        # most-constrained cell first keeps big boards tractable
        best_i, best_opts = 0, None
        for i, (r, c) in enumerate(remaining):
            opts = full & ~(rows[r] | cols[c] | boxes[_box_of(r, c, b)])
            cnt = bin(opts).count("1")
            if best_opts is None or cnt < bin(best_opts).count("1"):
                best_i, best_opts = i, opts
                if cnt <= 1:
                    break
        if not best_opts:
            return False
        r, c = remaining[best_i]
        rest = remaining[:best_i] + remaining[best_i + 1:]
        bx = _box_of(r, c, b)
        values = [v for v in range(1, n + 1) if best_opts >> (v - 1) & 1]
        if rng is not None:
            rng.shuffle(values)
        for v in values:
            bit = 1 << (v - 1)
            rows[r] |= bit; cols[c] |= bit; boxes[bx] |= bit
            grid[r][c] = v
            stop = rec(rest)
            rows[r] &= ~bit; cols[c] &= ~bit; boxes[bx] &= ~bit
            grid[r][c] = 0
            if stop:
                return True
        return False

    rec(empties)
    return found


class SudokuAdapter(ProblemAdapter):
    problem_id = "sudoku"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("grid_n",)

    def measure(self, text: str) -> SizeDescriptor:
        return SizeDescriptor(grid_n=len(self.parse(text)))

    def parse(self, text: str):
        grid = parse_int_grid(text, square=True)
        n = len(grid)
        b = math.isqrt(n)
        if b * b != n:
            raise ParseError("board side %d is not a perfect square" % n)
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
        return SizeDescriptor(grid_n=4)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "grid_n")
        n = size["grid_n"]
        b = math.isqrt(n)
        if b * b != n:
            raise SizeError("sudoku size grid_n=%d is not a perfect square" % n)
        # pattern board, then relabel symbols and shuffle bands/stacks: stays valid
        grid = [[(r % b) * b + r // b + c for c in range(n)] for r in range(n)]
        grid = [[(v % n) + 1 for v in row] for row in grid]
        relabel = list(range(1, n + 1))
        rng.shuffle(relabel)
        band = list(range(b))
        rows_order = []
        rng.shuffle(band)
        for g in band:
            inner = list(range(b))
            rng.shuffle(inner)
            rows_order.extend(g * b + i for i in inner)
        stack = list(range(b))
        cols_order = []
        rng.shuffle(stack)
        for g in stack:
            inner = list(range(b))
            rng.shuffle(inner)
            cols_order.extend(g * b + i for i in inner)
        full = [[relabel[grid[rows_order[r]][cols_order[c]] - 1] for c in range(n)]
                for r in range(n)]
        # blanking keeps the source board as a witness, so feasibility holds
        blank_fraction = 0.45 if n >= 16 else 0.55
        masked = [[0 if rng.random() < blank_fraction else full[r][c] for c in range(n)]
                  for r in range(n)]
        return self._instance(serialize_grid(masked), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given = self.parse(instance.text)
        n = len(given)
        b = math.isqrt(n)
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
        for br in range(b):
            for bc in range(b):
                vals = set(grid[br * b + i][bc * b + j] for i in range(b) for j in range(b))
                if vals != want:
                    return Verdict.incorrect("subgrid (%d,%d) is not a permutation" % (br, bc))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        grid = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        found = _solve_grid(grid, n, math.isqrt(n), cap=1, collect=sols)
        if not found:
            from ..core import INFEASIBLE
            return INFEASIBLE
        return serialize_grid(sols[0])

    def enumerate_solutions(self, instance: Instance, cap: int):
        grid = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        found = _solve_grid(grid, n, math.isqrt(n), cap=cap + 1, collect=sols)
        complete = found <= cap
        return [serialize_grid(g) for g in sols[:cap]], complete
