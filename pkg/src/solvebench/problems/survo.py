"""Fill an m x n board with 1..m*n once each to match given row and column sums."""

import random
from typing import List, Optional

from ..core import INFEASIBLE, Instance, ParseError, SizeDescriptor
from .base import ProblemAdapter, Verdict, parse_candidate_grid, serialize_grid

RULES = """We are given a partially filled rectangular board with m rows and n columns, together with the required sum of every row and every column.
- The completed board must contain each number from 1 to m*n exactly once.
- Empty cells are denoted by 0s; numbers already present on the input board cannot be changed.
- For every row, the numbers in that row must add up to the given row sum.
- For every column, the numbers in that column must add up to the given column sum."""

INPUT_FORMAT = """The input has m+1 lines. Each of the first m lines has n+1 space-separated integers:
the n cells of that row (0 marks an empty cell) followed by the required sum of the row.
The last line has n space-separated integers: the required sum of each column."""

OUTPUT_FORMAT = """The output has m lines, each with n space-separated integers: the completed board
containing each number from 1 to m*n exactly once and matching all row and column sums."""


def _search(grid: List[List[int]], row_sums, col_sums, m: int, n: int,
            cap: int = 1, collect: Optional[list] = None) -> int:
    total = m * n
    used = [False] * (total + 1)
    for row in grid:
        for v in row:
            if v:
                if used[v]:
                    return 0
                used[v] = True
    cells = [(r, c) for r in range(m) for c in range(n) if grid[r][c] == 0]
    found = 0

    def line_ok(values, target) -> bool:
        s = sum(values)
        k = sum(1 for v in values if v == 0)
        if k == 0:
            return s == target
        return s + k <= target <= s + k * total

    def check(r: int, c: int) -> bool:
        return line_ok(grid[r], row_sums[r]) and \
            line_ok([grid[i][c] for i in range(m)], col_sums[c])

    for r in range(m):
        for c in range(n):
            if grid[r][c] and not check(r, c):
                return 0

    def rec(i: int) -> bool:
        nonlocal found
        if i == len(cells):
            found += 1
            if collect is not None:
                collect.append([row[:] for row in grid])
            return found >= cap
        r, c = cells[i]
        for v in range(1, total + 1):
            if used[v]:
                continue
            grid[r][c] = v
            used[v] = True
            if check(r, c) and rec(i + 1):
                grid[r][c] = 0
                used[v] = False
                return True
            grid[r][c] = 0
            used[v] = False
        return False

    rec(0)
    return found


class SurvoAdapter(ProblemAdapter):
    problem_id = "survo"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("rows", "cols")

    def measure(self, text: str) -> SizeDescriptor:
        grid, _, col_sums = self.parse(text)
        return SizeDescriptor(rows=len(grid), cols=len(col_sums))

    def parse(self, text: str):
        lines = [ln for ln in text.split("\n") if ln.strip() != ""]
        if len(lines) < 2:
            raise ParseError("expected at least two lines")
        n = len(lines[-1].split())
        m = len(lines) - 1
        if n < 1:
            raise ParseError("no column sums", line=len(lines))
        grid = []
        row_sums = []
        for i in range(m):
            toks = lines[i].split()
            if len(toks) != n + 1:
                raise ParseError("row needs %d cells plus a row sum" % n, line=i + 1)
            try:
                vals = [int(t) for t in toks]
            except ValueError:
                raise ParseError("non-integer value", line=i + 1) from None
            grid.append(vals[:n])
            row_sums.append(vals[n])
        try:
            col_sums = [int(t) for t in lines[m].split()]
        except ValueError:
            raise ParseError("non-integer column sum", line=m + 1) from None
        total = m * n
        seen = set()
        for r, row in enumerate(grid):
            for v in row:
                if not (0 <= v <= total):
                    raise ParseError("cell value %d outside 0..%d" % (v, total), line=r + 1)
                if v:
                    if v in seen:
                        raise ParseError("value %d appears twice" % v, line=r + 1)
                    seen.add(v)
        return grid, row_sums, col_sums

    def serialize(self, struct) -> str:
        grid, row_sums, col_sums = struct
        lines = [" ".join(str(v) for v in row) + " " + str(row_sums[i])
                 for i, row in enumerate(grid)]
        lines.append(" ".join(str(s) for s in col_sums))
        return "\n".join(lines) + "\n"

    def default_train_size(self):
        return SizeDescriptor(rows=3, cols=4)

    def default_test_size(self):
        return SizeDescriptor(rows=3, cols=4)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "rows", "cols")
        m, n = size["rows"], size["cols"]
        values = list(range(1, m * n + 1))
        rng.shuffle(values)
        full = [values[r * n:(r + 1) * n] for r in range(m)]
        row_sums = [sum(row) for row in full]
        col_sums = [sum(full[r][c] for r in range(m)) for c in range(n)]
        masked = [[0 if rng.random() < 0.5 else full[r][c] for c in range(n)]
                  for r in range(m)]
        return self._instance(self.serialize((masked, row_sums, col_sums)), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given, row_sums, col_sums = self.parse(instance.text)
        m, n = len(given), len(given[0])
        grid = parse_candidate_grid(candidate, m, n)
        if grid is None:
            return Verdict.malformed("expected %d lines of %d integers" % (m, n))
        total = m * n
        flat = [v for row in grid for v in row]
        if any(not (1 <= v <= total) for v in flat):
            return Verdict.malformed("values must lie in 1..%d" % total)
        for r in range(m):
            for c in range(n):
                if given[r][c] and grid[r][c] != given[r][c]:
                    return Verdict.incorrect("fixed cell (%d,%d) was changed" % (r, c))
        if sorted(flat) != list(range(1, total + 1)):
            return Verdict.incorrect("board is not a permutation of 1..%d" % total)
        for r in range(m):
            if sum(grid[r]) != row_sums[r]:
                return Verdict.incorrect("row %d does not sum to %d" % (r, row_sums[r]))
        for c in range(n):
            if sum(grid[r][c] for r in range(m)) != col_sums[c]:
                return Verdict.incorrect("column %d does not sum to %d" % (c, col_sums[c]))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        grid, row_sums, col_sums = self.parse(instance.text)
        m, n = len(grid), len(grid[0])
        sols: list = []
        if not _search(grid, row_sums, col_sums, m, n, cap=1, collect=sols):
            return INFEASIBLE
        return serialize_grid(sols[0])

    def enumerate_solutions(self, instance: Instance, cap: int):
        grid, row_sums, col_sums = self.parse(instance.text)
        m, n = len(grid), len(grid[0])
        sols: list = []
        found = _search(grid, row_sums, col_sums, m, n, cap=cap + 1, collect=sols)
        return [serialize_grid(g) for g in sols[:cap]], found <= cap
