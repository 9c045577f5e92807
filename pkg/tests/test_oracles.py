"""Frozen counts for the enumeration oracles.

Every number asserted here is a published combinatorial constant, so a
regression in an oracle cannot hide behind a recomputed expectation.
"""

import pytest

from solvebench import get_problem
from solvebench.core import INFEASIBLE, SizeDescriptor
from solvebench.problems.base import VerdictKind


def empty_grid(n: int) -> str:
    return "\n".join(" ".join("0" for _ in range(n)) for _ in range(n)) + "\n"


def blank_instance(pid: str, n: int):
    adapter = get_problem(pid)
    dims = {"grid_n": n}
    return adapter, adapter._instance(empty_grid(n), SizeDescriptor(**dims))


class TestLatinSquareCounts:
    def test_order_three_has_twelve(self):
        adapter, inst = blank_instance("latin-square", 3)
        sols, complete = adapter.enumerate_solutions(inst, 1000)
        assert complete
        assert len(sols) == 12

    def test_order_four_has_576(self):
        adapter, inst = blank_instance("latin-square", 4)
        sols, complete = adapter.enumerate_solutions(inst, 1000)
        assert complete
        assert len(sols) == 576

    def test_reduced_counts(self):
        # fixing the first row and column to 1..n leaves 1 square at n=3
        # and 4 squares at n=4
        for n, want in ((3, 1), (4, 4)):
            adapter, inst = blank_instance("latin-square", n)
            sols, complete = adapter.enumerate_solutions(inst, 1000)
            assert complete
            top = " ".join(str(i) for i in range(1, n + 1))
            reduced = [
                s for s in sols
                if s.splitlines()[0] == top
                and [row.split()[0] for row in s.splitlines()]
                == [str(i) for i in range(1, n + 1)]
            ]
            assert len(reduced) == want

    def test_cap_truncates_and_flags(self):
        adapter, inst = blank_instance("latin-square", 3)
        sols, complete = adapter.enumerate_solutions(inst, 10)
        assert len(sols) == 10
        assert not complete
        sols, complete = adapter.enumerate_solutions(inst, 12)
        assert len(sols) == 12
        assert complete


class TestSudokuCounts:
    def test_blank_four_grid_has_288(self):
        adapter, inst = blank_instance("sudoku", 4)
        sols, complete = adapter.enumerate_solutions(inst, 1000)
        assert complete
        assert len(sols) == 288

    def test_every_enumerated_solution_verifies(self):
        adapter, inst = blank_instance("sudoku", 4)
        sols, _ = adapter.enumerate_solutions(inst, 1000)
        assert len(set(sols)) == len(sols)
        for s in sols:
            assert adapter.verify(inst, s).kind is VerdictKind.CORRECT


class TestMagicSquareCounts:
    def test_order_three_has_eight(self):
        adapter, inst = blank_instance("magic-square", 3)
        sols, complete = adapter.enumerate_solutions(inst, 100)
        assert complete
        assert len(sols) == 8

    def test_center_is_always_five(self):
        # all eight order-3 squares share the same center cell
        adapter, inst = blank_instance("magic-square", 3)
        sols, _ = adapter.enumerate_solutions(inst, 100)
        for s in sols:
            assert s.splitlines()[1].split()[1] == "5"


class TestNQueensCounts:
    @pytest.mark.parametrize("n,count", [(4, 2), (5, 10), (6, 4), (8, 92)])
    def test_known_counts(self, n, count):
        adapter, inst = blank_instance("n-queens", n)
        sols, complete = adapter.enumerate_solutions(inst, count + 10)
        assert complete
        assert len(sols) == count

    @pytest.mark.parametrize("n", [2, 3])
    def test_small_boards_infeasible(self, n):
        adapter, inst = blank_instance("n-queens", n)
        assert adapter.solve(inst) == INFEASIBLE
        sols, complete = adapter.enumerate_solutions(inst, 10)
        assert sols == []
        assert complete


class TestSubsetSumOracle:
    def test_full_array_is_unique_solution(self):
        adapter = get_problem("subset-sum")
        text = " ".join(str(i) for i in range(1, 11)) + "\n55\n"
        inst = adapter._instance(text, SizeDescriptor(array_len=10))
        sols, complete = adapter.enumerate_solutions(inst, 10)
        assert complete
        assert sols == ["1 2 3 4 5 6 7 8 9 10\n"]

    def test_infeasible_target_answer_is_none(self):
        # "None" is the expected output text here, not a solver failure
        adapter = get_problem("subset-sum")
        inst = adapter._instance("2 4 6\n5\n", SizeDescriptor(array_len=3))
        assert adapter.solve(inst) == "None\n"
        sols, complete = adapter.enumerate_solutions(inst, 10)
        assert sols == ["None\n"]
        assert complete
        assert adapter.verify(inst, "None\n").kind is VerdictKind.CORRECT


class TestSolveAgreesWithEnumeration:
    @pytest.mark.parametrize("pid,n", [("latin-square", 3), ("sudoku", 4),
                                       ("magic-square", 3), ("n-queens", 5)])
    def test_solver_answer_is_enumerated(self, pid, n):
        adapter, inst = blank_instance(pid, n)
        sols, complete = adapter.enumerate_solutions(inst, 1000)
        assert complete
        assert adapter.solve(inst) in sols
