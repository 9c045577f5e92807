"""Latin-style board plus strict less-than constraints between cell pairs."""

import random
from typing import List, Optional, Tuple

from ..core import INFEASIBLE, Instance, ParseError, SizeDescriptor
from .base import ProblemAdapter, Verdict, parse_candidate_grid, serialize_grid
from .latin_square import fill_square

RULES = """We are given a partially filled n x n square board together with ordering constraints between pairs of cells.
- Empty cells are denoted by 0s and have to be filled with numbers from 1 to n.
- Numbers already present on the input board cannot be changed.
- Every row of the completed board must contain each number from 1 to n exactly once.
- Every column of the completed board must contain each number from 1 to n exactly once.
- Cells are numbered row by row starting from 0, so cell k sits at row k // n and column k % n. Each constraint names two cells x and y and requires the number in cell x to be strictly smaller than the number in cell y."""

INPUT_FORMAT = """The input starts with n lines, each with n space-separated integers between 0 and n
(0 marks an empty cell). Every following line has two space-separated integers x and y,
one constraint each: the value at cell x must be strictly smaller than the value at cell y.
Cells are numbered row by row starting from 0."""

OUTPUT_FORMAT = """The output has n lines, each with n space-separated integers between 1 and n:
the completed board."""


def _search(grid: List[List[int]], pairs: List[Tuple[int, int]], n: int,
            cap: int = 1, collect: Optional[list] = None) -> int:
    rows = [0] * n
    cols = [0] * n
    by_cell = {}
    for x, y in pairs:
        by_cell.setdefault(x, []).append((x, y))
        by_cell.setdefault(y, []).append((x, y))
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

    def cell_ok(idx: int) -> bool:
        # only constraints whose both endpoints are filled are decidable
        for x, y in by_cell.get(idx, ()):
            vx = grid[x // n][x % n]
            vy = grid[y // n][y % n]
            if vx and vy and not vx < vy:
                return False
        return True

    for idx in range(n * n):
        if grid[idx // n][idx % n] and not cell_ok(idx):
            return 0

    found = 0

    def rec(i: int) -> bool:
        nonlocal found
        if i == len(empties):
            found += 1
            if collect is not None:
                collect.append([row[:] for row in grid])
            return found >= cap
        r, c = empties[i]
        taken = rows[r] | cols[c]
        for v in range(1, n + 1):
            if taken >> (v - 1) & 1:
                continue
            bit = 1 << (v - 1)
            grid[r][c] = v
            rows[r] |= bit; cols[c] |= bit
            if cell_ok(r * n + c) and rec(i + 1):
                grid[r][c] = 0
                rows[r] &= ~bit; cols[c] &= ~bit
                return True
            grid[r][c] = 0
            rows[r] &= ~bit; cols[c] &= ~bit
        return False

    rec(0)
    return found


class FutoshikiAdapter(ProblemAdapter):
    problem_id = "futoshiki"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("grid_n",)

    def measure(self, text: str) -> SizeDescriptor:
        grid, _ = self.parse(text)
        return SizeDescriptor(grid_n=len(grid))

    def parse(self, text: str):
        lines = [ln for ln in text.split("\n") if ln.strip() != ""]
        if not lines:
            raise ParseError("empty instance")
        n = len(lines[0].split())
        if len(lines) < n:
            raise ParseError("expected %d board lines" % n)
        grid = []
        for i in range(n):
            toks = lines[i].split()
            if len(toks) != n:
                raise ParseError("board row needs %d values" % n, line=i + 1)
            try:
                row = [int(t) for t in toks]
            except ValueError:
                raise ParseError("non-integer board value", line=i + 1) from None
            for v in row:
                if not (0 <= v <= n):
                    raise ParseError("cell value %d outside 0..%d" % (v, n), line=i + 1)
            grid.append(row)
        pairs = []
        seen = set()
        for lineno, ln in enumerate(lines[n:], start=n + 1):
            toks = ln.split()
            if len(toks) != 2:
                raise ParseError("constraint line needs two cell indices", line=lineno)
            try:
                x, y = int(toks[0]), int(toks[1])
            except ValueError:
                raise ParseError("non-integer cell index", line=lineno) from None
            if not (0 <= x < n * n and 0 <= y < n * n):
                raise ParseError("cell index outside 0..%d" % (n * n - 1), line=lineno)
            if x == y:
                raise ParseError("constraint relates a cell to itself", line=lineno)
            if (x, y) in seen:
                raise ParseError("duplicate constraint %d %d" % (x, y), line=lineno)
            seen.add((x, y))
            pairs.append((x, y))
        return grid, pairs

    def serialize(self, struct) -> str:
        grid, pairs = struct
        lines = [" ".join(str(v) for v in row) for row in grid]
        lines.extend("%d %d" % p for p in pairs)
        return "\n".join(lines) + "\n"

    def default_train_size(self):
        return SizeDescriptor(grid_n=4)

    def default_test_size(self):
        return SizeDescriptor(grid_n=5)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "grid_n")
        n = size["grid_n"]
        board = [[0] * n for _ in range(n)]
        sols: list = []
        fill_square(board, n, rng=rng, cap=1, collect=sols)
        full = sols[0]
        adjacent = []
        for r in range(n):
            for c in range(n):
                if c + 1 < n:
                    adjacent.append((r * n + c, r * n + c + 1))
                if r + 1 < n:
                    adjacent.append((r * n + c, (r + 1) * n + c))
        rng.shuffle(adjacent)
        pairs = []
        for a, bidx in adjacent[:n]:
            va = full[a // n][a % n]
            vb = full[bidx // n][bidx % n]
            pairs.append((a, bidx) if va < vb else (bidx, a))
        pairs.sort()
        masked = [[0 if rng.random() < 0.5 else full[r][c] for c in range(n)]
                  for r in range(n)]
        return self._instance(self.serialize((masked, pairs)), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        given, pairs = self.parse(instance.text)
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
        for x, y in pairs:
            vx = grid[x // n][x % n]
            vy = grid[y // n][y % n]
            if not vx < vy:
                return Verdict.incorrect(
                    "constraint violated: cell %d holds %d, not smaller than cell %d holding %d"
                    % (x, vx, y, vy))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        grid, pairs = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        if not _search(grid, pairs, n, cap=1, collect=sols):
            return INFEASIBLE
        return serialize_grid(sols[0])

    def enumerate_solutions(self, instance: Instance, cap: int):
        grid, pairs = self.parse(instance.text)
        n = len(grid)
        sols: list = []
        found = _search(grid, pairs, n, cap=cap + 1, collect=sols)
        return [serialize_grid(g) for g in sols[:cap]], found <= cap
