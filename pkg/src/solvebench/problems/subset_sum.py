"""Pick elements of an array summing exactly to a target, or report None."""

import random
from typing import List, Optional, Tuple

from ..core import Instance, ParseError, SizeDescriptor, strip_trailing_blank_lines
from .base import ProblemAdapter, Verdict

RULES = """We are given an array of positive integers and a target value.
- We have to choose some of the elements of the array so that the chosen elements add up exactly to the target value. Each element may be chosen at most once.
- If no choice of elements adds up to the target, we have to report that instead."""

INPUT_FORMAT = """The input has two lines. The first line has the space-separated elements of the
array, each a positive integer. The second line has a single integer: the target value."""

OUTPUT_FORMAT = """If a valid choice exists, the output is a single line with the chosen elements,
space-separated, in any order. Otherwise the output is a single line containing exactly
the word None."""


def _subset_texts(values: List[int], target: int, cap: int) -> Tuple[List[str], bool]:
    """Distinct chosen-multiset texts (sorted ascending) up to cap."""
    n = len(values)
    texts = set()
    overflow = False

    def rec(i: int, remaining: int, chosen: List[int]):
        nonlocal overflow
        if overflow:
            return
        if remaining == 0 and chosen:
            text = " ".join(str(v) for v in sorted(chosen)) + "\n"
            if text not in texts:
                if len(texts) >= cap:
                    overflow = True
                    return
                texts.add(text)
        if i == n or remaining <= 0:
            return
        if sum(values[i:]) < remaining:
            return
        chosen.append(values[i])
        rec(i + 1, remaining - values[i], chosen)
        chosen.pop()
        rec(i + 1, remaining, chosen)

    rec(0, target, [])
    return sorted(texts), not overflow


def _feasible(values: List[int], target: int) -> bool:
    reachable = 1  # bitset of achievable sums
    for v in values:
        reachable |= reachable << v
    return target >= 0 and bool(reachable >> target & 1)


class SubsetSumAdapter(ProblemAdapter):
    problem_id = "subset-sum"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("array_len",)

    def measure(self, text: str) -> SizeDescriptor:
        values, _ = self.parse(text)
        return SizeDescriptor(array_len=len(values))

    def parse(self, text: str):
        lines = [ln for ln in text.split("\n") if ln.strip() != ""]
        if len(lines) != 2:
            raise ParseError("expected exactly two lines")
        try:
            values = [int(t) for t in lines[0].split()]
        except ValueError:
            raise ParseError("non-integer array element", line=1) from None
        if not values:
            raise ParseError("array must not be empty", line=1)
        if any(v < 1 for v in values):
            raise ParseError("array elements must be positive", line=1)
        toks = lines[1].split()
        if len(toks) != 1:
            raise ParseError("target line must hold a single integer", line=2)
        try:
            target = int(toks[0])
        except ValueError:
            raise ParseError("non-integer target", line=2) from None
        if target < 1:
            raise ParseError("target must be positive", line=2)
        return values, target

    def serialize(self, struct) -> str:
        values, target = struct
        return " ".join(str(v) for v in values) + "\n" + str(target) + "\n"

    def default_train_size(self):
        return SizeDescriptor(array_len=5)

    def default_test_size(self):
        return SizeDescriptor(array_len=8)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "array_len")
        k = size["array_len"]
        values = [rng.randint(1, 30) for _ in range(k)]
        if rng.random() < 0.5:
            count = rng.randint(1, k)
            target = sum(rng.sample(values, count))
        else:
            target = rng.randint(1, sum(values) + 10)
        return self._instance(self.serialize((values, target)), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        values, target = self.parse(instance.text)
        body = strip_trailing_blank_lines(candidate)
        lines = [ln for ln in body.split("\n") if ln.strip() != ""]
        if len(lines) != 1:
            return Verdict.malformed("expected a single output line")
        if lines[0].strip() == "None":
            if _feasible(values, target):
                return Verdict.incorrect("a valid choice of elements exists")
            return Verdict.correct()
        try:
            chosen = [int(t) for t in lines[0].split()]
        except ValueError:
            return Verdict.malformed("expected integers or the word None")
        if not chosen:
            return Verdict.malformed("empty element list")
        pool = list(values)
        for v in chosen:
            if v in pool:
                pool.remove(v)
            else:
                return Verdict.incorrect(
                    "element %d is not available in the array that often" % v)
        if sum(chosen) != target:
            return Verdict.incorrect(
                "chosen elements sum to %d, not %d" % (sum(chosen), target))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        values, target = self.parse(instance.text)
        if not _feasible(values, target):
            return "None\n"
        texts, _ = _subset_texts(values, target, cap=1)
        return texts[0]

    def enumerate_solutions(self, instance: Instance, cap: int):
        values, target = self.parse(instance.text)
        if not _feasible(values, target):
            return ["None\n"], True
        texts, complete = _subset_texts(values, target, cap=cap)
        return texts, complete
